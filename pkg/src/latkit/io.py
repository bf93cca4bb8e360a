"""Line-oriented text formats for lattices, maps, union maps, orthospaces,
closure spaces and causal relations, plus the workspace that resolves
cross-references between parsed blocks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import build_poset, lattice_from_poset
from .errors import CycleDetected, ParseError
from .ortho import OrthoSpace, validate_ortho, validate_orthospace
from .closure import ClosureSpace, partial_map
from .core import LatticeMap
from .stateprop import CausalRelation
from .transition import union_map
from .weak import partial_from_table


@dataclass
class Block:
    kind: str
    name: str
    header_rest: str
    line: int
    fields: dict  # key -> (value string, line)
    arrows: list  # (lhs, op, rhs, line)


_HEADS = ("lattice", "map", "umap", "ospace", "cspace", "causal")


def _strip(line):
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def parse_blocks(text):
    blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head = line.split(None, 1)[0]
        if head in _HEADS:
            rest = line[len(head):].strip()
            if head in ("map", "umap", "causal"):
                if ":" not in rest:
                    raise ParseError("%s header needs NAME : DOM -> COD" % head, line=lineno)
                name, sig = [s.strip() for s in rest.split(":", 1)]
                current = Block(head, name, sig, lineno, {}, [])
            else:
                if not rest or len(rest.split()) != 1:
                    raise ParseError("%s header needs exactly one name" % head, line=lineno)
                current = Block(head, rest, "", lineno, {}, [])
            blocks.append(current)
            continue
        if current is None:
            raise ParseError("content before any block header", line=lineno)
        if "|->" in line:
            lhs, rhs = [s.strip() for s in line.split("|->", 1)]
            current.arrows.append((lhs, "|->", rhs, lineno))
        elif "~>" in line and ":" not in line:
            lhs, rhs = [s.strip() for s in line.split("~>", 1)]
            current.arrows.append((lhs, "~>", rhs, lineno))
        elif ":" in line:
            key, value = [s.strip() for s in line.split(":", 1)]
            if key in current.fields:
                raise ParseError("duplicate field %r" % key, line=lineno)
            current.fields[key] = (value, lineno)
        else:
            raise ParseError("unrecognized line %r" % line, line=lineno)
    return blocks


def _split_pair(token, sep, lineno):
    if sep not in token:
        raise ParseError("expected %r in token %r" % (sep, token), line=lineno)
    left, right = token.split(sep, 1)
    if not left or not right:
        raise ParseError("malformed token %r" % token, line=lineno)
    return left, right


def _parse_set(token, lineno):
    token = token.strip()
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError("expected a {...} set, got %r" % token, line=lineno)
    inner = token[1:-1].strip()
    if not inner:
        return []
    return [t.strip() for t in inner.split(",")]


def _arrow_target(block):
    if "->" not in block.header_rest:
        raise ParseError("header needs DOM -> COD", line=block.line)
    dom, cod = [s.strip() for s in block.header_rest.split("->", 1)]
    if not dom or not cod:
        raise ParseError("malformed DOM -> COD", line=block.line)
    return dom, cod


@dataclass
class Workspace:
    """Resolved objects from one or more parsed documents."""

    lattices: dict = field(default_factory=dict)
    orthos: dict = field(default_factory=dict)  # name -> OrthoLattice
    maps: dict = field(default_factory=dict)  # name -> LatticeMap or PartialJoinMap
    union_maps: dict = field(default_factory=dict)
    ospaces: dict = field(default_factory=dict)
    cspaces: dict = field(default_factory=dict)
    cmaps: dict = field(default_factory=dict)  # continuous partial maps
    causals: dict = field(default_factory=dict)
    signatures: dict = field(default_factory=dict)  # map name -> (dom, cod) names


def _label_index(labels, token, lineno, what):
    try:
        return labels.index(token)
    except ValueError:
        raise ParseError("unknown %s %r" % (what, token), line=lineno)


def _build_lattice(block):
    if "elements" not in block.fields:
        raise ParseError("lattice block needs an elements field", line=block.line)
    labels, _ = block.fields["elements"]
    labels = labels.split()
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate element labels", line=block.fields["elements"][1])
    pairs = []
    if "covers" in block.fields:
        text, lineno = block.fields["covers"]
        for token in text.split():
            a, b = _split_pair(token, "<", lineno)
            pairs.append(
                (_label_index(labels, a, lineno, "element"),
                 _label_index(labels, b, lineno, "element"))
            )
    try:
        poset = build_poset(len(labels), pairs, mode="covers", labels=labels)
    except CycleDetected as exc:
        raise ParseError("cyclic covers: %s" % exc, line=block.line)
    lattice = lattice_from_poset(poset)
    ortho = None
    if "ortho" in block.fields:
        text, lineno = block.fields["ortho"]
        table = {}
        for token in text.split():
            a, b = _split_pair(token, "->", lineno)
            table[_label_index(labels, a, lineno, "element")] = _label_index(
                labels, b, lineno, "element"
            )
        if sorted(table) != list(range(len(labels))):
            raise ParseError("ortho table must cover every element", line=lineno)
        ortho = validate_ortho(lattice, tuple(table[i] for i in range(len(labels))))
    return lattice, ortho


def _build_ospace(block):
    if "points" not in block.fields:
        raise ParseError("ospace block needs a points field", line=block.line)
    labels = block.fields["points"][0].split()
    rows = [0] * len(labels)
    if "orth" in block.fields:
        text, lineno = block.fields["orth"]
        for token in text.split():
            a, b = _split_pair(token, "~", lineno)
            i = _label_index(labels, a, lineno, "point")
            j = _label_index(labels, b, lineno, "point")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return validate_orthospace(
        OrthoSpace(len(labels), tuple(rows), tuple(labels)), require_separating=False
    )


def _build_cspace(block):
    if "points" not in block.fields:
        raise ParseError("cspace block needs a points field", line=block.line)
    labels = block.fields["points"][0].split()
    closed = []
    if "closed" in block.fields:
        text, lineno = block.fields["closed"]
        for token in text.split():
            closed.append(
                frozenset(
                    _label_index(labels, t, lineno, "point")
                    for t in _parse_set(token, lineno)
                )
            )
    closed.append(frozenset(range(len(labels))))
    return ClosureSpace(len(labels), frozenset(closed), tuple(labels))


def load_workspace(texts, workspace=None):
    """Parse one or more documents and resolve all cross-references.

    Lattices and spaces are resolved first so maps may reference them
    regardless of declaration order.
    """
    if isinstance(texts, str):
        texts = [texts]
    ws = workspace or Workspace()
    blocks = []
    for text in texts:
        blocks.extend(parse_blocks(text))
    names = {}
    for b in blocks:
        if b.name in names:
            raise ParseError("duplicate name %r" % b.name, line=b.line)
        names[b.name] = b
    for b in blocks:
        if b.kind == "lattice":
            lattice, ortho = _build_lattice(b)
            ws.lattices[b.name] = lattice
            if ortho is not None:
                ws.orthos[b.name] = ortho
        elif b.kind == "ospace":
            ws.ospaces[b.name] = _build_ospace(b)
        elif b.kind == "cspace":
            ws.cspaces[b.name] = _build_cspace(b)
    for b in blocks:
        if b.kind == "map":
            _resolve_map(ws, b)
        elif b.kind == "umap":
            _resolve_umap(ws, b)
        elif b.kind == "causal":
            _resolve_causal(ws, b)
    return ws


def _resolve_map(ws, block):
    dom_name, cod_name = _arrow_target(block)
    ws.signatures[block.name] = (dom_name, cod_name)
    if dom_name in ws.cspaces or cod_name in ws.cspaces:
        return _resolve_cmap(ws, block, dom_name, cod_name)
    if dom_name not in ws.lattices or cod_name not in ws.lattices:
        raise ParseError(
            "map references unknown lattice %r" % (dom_name if dom_name not in ws.lattices else cod_name),
            line=block.line,
        )
    dom, cod = ws.lattices[dom_name], ws.lattices[cod_name]
    entries = {}
    for lhs, op, rhs, lineno in block.arrows:
        if op != "|->":
            raise ParseError("map lines use |->", line=lineno)
        a = _label_index(dom.labels, lhs, lineno, "element")
        b = _label_index(cod.labels, rhs, lineno, "element")
        if a in entries:
            raise ParseError("duplicate value for %r" % lhs, line=lineno)
        entries[a] = b
    if "anchor" in block.fields:
        text, lineno = block.fields["anchor"]
        anchor = _label_index(dom.labels, text.strip(), lineno, "element")
        missing = [x for x in dom.downset(anchor) if x not in entries]
        if missing:
            raise ParseError(
                "partial map missing value for %r" % dom.labels[missing[0]], line=block.line
            )
        ws.maps[block.name] = partial_from_table(dom, cod, anchor, entries)
        return
    missing = [x for x in dom.elements() if x not in entries]
    if missing:
        raise ParseError(
            "map missing value for %r" % dom.labels[missing[0]], line=block.line
        )
    ws.maps[block.name] = LatticeMap(dom, cod, tuple(entries[x] for x in dom.elements()))


def _resolve_cmap(ws, block, dom_name, cod_name):
    if dom_name not in ws.cspaces or cod_name not in ws.cspaces:
        raise ParseError("continuous map needs two closure spaces", line=block.line)
    src, tgt = ws.cspaces[dom_name], ws.cspaces[cod_name]
    kernel = []
    if "kernel" in block.fields:
        text, lineno = block.fields["kernel"]
        kernel = [_label_index(src.labels, t, lineno, "point") for t in text.split()]
    mapping = {}
    for lhs, op, rhs, lineno in block.arrows:
        if op != "|->":
            raise ParseError("map lines use |->", line=lineno)
        p = _label_index(src.labels, lhs, lineno, "point")
        q = _label_index(tgt.labels, rhs, lineno, "point")
        mapping[p] = q
    missing = [p for p in range(src.size) if p not in kernel and p not in mapping]
    if missing:
        raise ParseError(
            "continuous map missing value for %r" % src.labels[missing[0]],
            line=block.line,
        )
    ws.cmaps[block.name] = partial_map(src, tgt, kernel, mapping)


def _resolve_umap(ws, block):
    dom_name, cod_name = _arrow_target(block)
    ws.signatures[block.name] = (dom_name, cod_name)
    if dom_name not in ws.lattices or cod_name not in ws.lattices:
        raise ParseError("umap references an unknown lattice", line=block.line)
    dom, cod = ws.lattices[dom_name], ws.lattices[cod_name]
    images = {}
    for lhs, op, rhs, lineno in block.arrows:
        if op != "|->":
            raise ParseError("umap lines use |->", line=lineno)
        a = _label_index(dom.labels, lhs, lineno, "element")
        images[a] = frozenset(
            _label_index(cod.labels, t, lineno, "element")
            for t in _parse_set(rhs, lineno)
        )
    for a in dom.elements():
        if a != dom.bottom and a not in images:
            raise ParseError(
                "umap missing image for %r" % dom.labels[a], line=block.line
            )
    ws.union_maps[block.name] = union_map(dom, cod, images)


def _resolve_causal(ws, block):
    dom_name, cod_name = _arrow_target(block)
    ws.signatures[block.name] = (dom_name, cod_name)
    if dom_name not in ws.lattices or cod_name not in ws.lattices:
        raise ParseError("causal block references an unknown lattice", line=block.line)
    src, tgt = ws.lattices[dom_name], ws.lattices[cod_name]
    pairs = set()
    for lhs, op, rhs, lineno in block.arrows:
        if op != "~>":
            raise ParseError("causal lines use ~>", line=lineno)
        pairs.add(
            (_label_index(src.labels, lhs, lineno, "element"),
             _label_index(tgt.labels, rhs, lineno, "element"))
        )
    ws.causals[block.name] = CausalRelation(src, tgt, frozenset(pairs))


def format_lattice(name, lattice, ortho=None):
    lines = ["lattice %s" % name]
    lines.append("elements: %s" % " ".join(lattice.labels))
    covers = [
        "%s<%s" % (lattice.labels[a], lattice.labels[b])
        for a, b in lattice.poset.cover_pairs()
    ]
    if covers:
        lines.append("covers: %s" % " ".join(covers))
    if ortho is not None:
        table = ortho.ortho if hasattr(ortho, "ortho") else tuple(ortho)
        lines.append(
            "ortho: %s"
            % " ".join(
                "%s->%s" % (lattice.labels[a], lattice.labels[table[a]])
                for a in lattice.elements()
            )
        )
    return "\n".join(lines) + "\n"


def format_map(name, f, dom_name, cod_name):
    lines = ["map %s : %s -> %s" % (name, dom_name, cod_name)]
    for a in f.dom.elements():
        lines.append("%s |-> %s" % (f.dom.labels[a], f.cod.labels[f(a)]))
    return "\n".join(lines) + "\n"


def format_partial_map(name, partial, dom_name, cod_name):
    lines = ["map %s : %s -> %s" % (name, dom_name, cod_name)]
    lines.append("anchor: %s" % partial.source.labels[partial.anchor])
    for x, value in partial.values:
        lines.append(
            "%s |-> %s" % (partial.source.labels[x], partial.target.labels[value])
        )
    return "\n".join(lines) + "\n"


def format_umap(name, theta, dom_name, cod_name):
    lines = ["umap %s : %s -> %s" % (name, dom_name, cod_name)]
    for a, image in theta.singleton_images:
        body = ",".join(theta.target.labels[x] for x in sorted(image))
        lines.append("%s |-> {%s}" % (theta.source.labels[a], body))
    return "\n".join(lines) + "\n"


def format_ospace(name, space):
    lines = ["ospace %s" % name]
    lines.append("points: %s" % " ".join(space.labels))
    tokens = []
    for p in space.points():
        for q in space.points():
            if p < q and space.perp(p, q):
                tokens.append("%s~%s" % (space.labels[p], space.labels[q]))
    if tokens:
        lines.append("orth: %s" % " ".join(tokens))
    return "\n".join(lines) + "\n"


def format_cspace(name, space):
    lines = ["cspace %s" % name]
    lines.append("points: %s" % " ".join(space.labels))
    sets = sorted(space.closed, key=lambda s: (len(s), sorted(s)))
    tokens = [
        "{%s}" % ",".join(space.labels[p] for p in sorted(s))
        for s in sets
        if s != frozenset(range(space.size))
    ]
    if tokens:
        lines.append("closed: %s" % " ".join(tokens))
    return "\n".join(lines) + "\n"


def format_causal(name, relation, dom_name, cod_name):
    lines = ["causal %s : %s -> %s" % (name, dom_name, cod_name)]
    for a, b in sorted(relation.pairs):
        lines.append(
            "%s ~> %s" % (relation.source.labels[a], relation.target.labels[b])
        )
    return "\n".join(lines) + "\n"

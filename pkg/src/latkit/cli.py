"""Command-line front end: parse object files, run constructions, emit
reports, and drive the full proposition sweep.

Exit codes: 0 success, 1 validation or proposition failure, 2 parse error,
3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closure, io, ortho, stateprop, suite, transition
from .errors import LatkitError, ParseError, SizeLimit, ValidationError
from .maps import dualize, hom_set, left_adjoint, right_adjoint

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_SIZE = 3


def _load_files(paths):
    texts = []
    for path in paths:
        with open(path) as handle:
            texts.append(handle.read())
    return io.load_workspace(texts)


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if isinstance(payload, dict):
            for key, value in payload.items():
                print("%s: %s" % (key, value))
        else:
            for item in payload:
                print(item)


def _corpus_lattice(args, name):
    """Resolve a lattice by name from files, or from the built-in corpus."""
    if args.files:
        ws = _load_files(args.files)
        if name in ws.lattices:
            return ws.lattices[name]
        raise ParseError("no lattice named %r in the given files" % name)
    from . import corpus

    table = corpus.named_lattices()
    if name not in table:
        raise ParseError("no built-in lattice named %r" % name)
    return table[name]


def cmd_check(args):
    reports = []
    ok = True
    try:
        ws = _load_files(args.files)
    except ParseError:
        raise
    for name, lat in ws.lattices.items():
        reports.append({"object": name, "kind": "lattice", "status": "pass"})
    for name in ws.orthos:
        reports.append({"object": name, "kind": "ortho", "status": "pass"})
    for name, f in ws.maps.items():
        kind = "partial-map" if hasattr(f, "anchor") else "map"
        entry = {"object": name, "kind": kind, "status": "pass"}
        if kind == "map":
            from .maps import preservation_profile

            profile = preservation_profile(f)
            entry["profile"] = {
                "joins": profile.joins,
                "meets": profile.meets,
                "balanced": profile.balanced,
                "dense": profile.dense,
            }
            if not f.is_isotone():
                entry["status"] = "fail"
                entry["witness"] = "map is not isotone"
                ok = False
        reports.append(entry)
    for name, alpha in ws.cmaps.items():
        good, witness = closure.check_continuity(alpha)
        entry = {"object": name, "kind": "continuous-map", "status": "pass"}
        if not good:
            entry["status"] = "fail"
            entry["witness"] = "closed set %s pulls back open" % sorted(witness)
            ok = False
        reports.append(entry)
    for name, relation in ws.causals.items():
        entry = {"object": name, "kind": "causal", "status": "pass"}
        try:
            stateprop.validate_causal(relation)
        except ValidationError as exc:
            entry["status"] = "fail"
            entry["witness"] = str(exc)
            ok = False
        reports.append(entry)
    for name in ws.cspaces:
        reports.append({"object": name, "kind": "cspace", "status": "pass"})
    for name in ws.ospaces:
        reports.append({"object": name, "kind": "ospace", "status": "pass"})
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))
    else:
        for entry in reports:
            line = "%s %s %s" % (entry["status"].upper(), entry["kind"], entry["object"])
            if "witness" in entry:
                line += "  [%s]" % entry["witness"]
            print(line)
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_adjoint(args):
    ws = _load_files(args.files)
    if args.name not in ws.maps:
        raise ParseError("no map named %r" % args.name)
    f = ws.maps[args.name]
    if hasattr(f, "anchor"):
        raise ValidationError("adjoint of a partial map is not defined here")
    dom_name, cod_name = ws.signatures[args.name]
    if args.direction == "right":
        result = right_adjoint(f)
    elif args.direction == "left":
        result = left_adjoint(f)
    elif args.direction == "dualize":
        result = dualize(f, "join")
    elif args.direction == "dagger":
        if dom_name not in ws.orthos or cod_name not in ws.orthos:
            raise ValidationError("dagger needs ortho tables on both lattices")
        result = ortho.dagger(f, ws.orthos[dom_name], ws.orthos[cod_name])
    else:
        raise ValidationError("unknown direction %r" % args.direction)
    out_dom, out_cod = cod_name, dom_name
    sys.stdout.write(
        io.format_map("%s_%s" % (args.name, args.direction), result, out_dom, out_cod)
    )
    return EXIT_OK


def cmd_hom(args):
    dom = _corpus_lattice(args, args.dom)
    cod = _corpus_lattice(args, args.cod)
    if args.max_size and max(dom.size, cod.size) > args.max_size:
        raise SizeLimit("lattice exceeds --max-size %d" % args.max_size)
    maps = hom_set(dom, cod, args.cls)
    if args.json:
        print(
            json.dumps(
                [list(f.values) for f in maps],
            )
        )
    else:
        for k, f in enumerate(maps):
            sys.stdout.write(io.format_map("h%d" % k, f, args.dom, args.cod))
    return EXIT_OK


def cmd_count(args):
    dom = _corpus_lattice(args, args.dom)
    cod = _corpus_lattice(args, args.cod)
    if args.max_size and max(dom.size, cod.size) > args.max_size:
        raise SizeLimit("lattice exceeds --max-size %d" % args.max_size)
    count = transition.hom_count(args.category, dom, cod)
    if args.json:
        print(
            json.dumps(
                {"category": args.category, "dom": args.dom, "cod": args.cod, "count": count}
            )
        )
    else:
        print(count)
    return EXIT_OK


def cmd_closure(args):
    ws = _load_files(args.files)
    if args.map:
        if args.map not in ws.maps:
            raise ParseError("no map named %r" % args.map)
        f = ws.maps[args.map]
        operator = closure.monad_from_adjunction(f, right_adjoint(f))
        fixed = closure.fixed_points(operator)
        labels = [f.dom.labels[e] for e in fixed.elements]
        _emit({"fixed": " ".join(labels)}, args.json)
        return EXIT_OK
    if args.space:
        if args.space not in ws.cspaces:
            raise ParseError("no closure space named %r" % args.space)
        space = ws.cspaces[args.space]
        wanted = [s for s in (args.subset or "").split(",") if s]
        points = [list(space.labels).index(s) for s in wanted]
        closed = space.closure_of(points)
        _emit({"closure": " ".join(space.labels[p] for p in sorted(closed))}, args.json)
        return EXIT_OK
    raise ValidationError("closure needs --map or --space")


def cmd_equiv(args):
    ws = _load_files(args.files)
    results = []
    ok = True
    for name, lat in ws.lattices.items():
        if not lat.is_atomistic():
            continue
        report, _ = closure.lattice_roundtrip(lat)
        results.append({"object": name, "status": "pass" if report.passed else "fail"})
        ok = ok and report.passed
        if name in ws.orthos:
            space, _ = ortho.orthospace_from_lattice(ws.orthos[name])
            rebuilt, _ = ortho.biortho_lattice(space)
            good = rebuilt.size == lat.size and (
                lat.size > 8
                or ortho.lattice_isomorphic_with_ortho(ws.orthos[name], rebuilt)
                is not None
            )
            results.append(
                {"object": "%s(ortho)" % name, "status": "pass" if good else "fail"}
            )
            ok = ok and good
    for name, space in ws.cspaces.items():
        if not space.is_simple():
            continue
        report = closure.space_roundtrip(space)
        results.append({"object": name, "status": "pass" if report.passed else "fail"})
        ok = ok and report.passed
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
    else:
        for entry in results:
            print("%s %s" % (entry["status"].upper(), entry["object"]))
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_witness(args):
    lattice = _corpus_lattice(args, args.lattice)
    try:
        element = list(lattice.labels).index(args.element)
    except ValueError:
        raise ParseError("no element labelled %r" % args.element)
    theta = transition.strictness_witness(lattice, element)
    based = transition.is_based(theta)
    if args.json:
        print(
            json.dumps(
                {
                    "lattice": args.lattice,
                    "element": args.element,
                    "coherent_with_identity": True,
                    "based": based,
                }
            )
        )
    else:
        sys.stdout.write(
            io.format_umap("witness_%s" % args.element, theta, args.lattice, args.lattice)
        )
        print("# coherent with the identity; based: %s" % based)
    return EXIT_OK


def cmd_suite(args):
    if args.corpus:
        bundle, failures = suite.load_corpus_dir(args.corpus)
    else:
        bundle, failures = suite.default_bundle(), []
    reports = failures + suite.run_suite(
        bundle=bundle,
        filter_text=args.filter,
        max_size=args.max_size,
        seed=args.seed,
    )
    failed = [r for r in reports if r.status == "fail"]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            line = "%s %s %s (%.1f ms)" % (r.status.upper(), r.prop, r.object, r.millis)
            if r.witness:
                line += "  [%s]" % r.witness
            print(line)
        print("%d checks, %d failed" % (len(reports), len(failed)))
    return EXIT_OK if not failed else EXIT_VALIDATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latkit", description="Finite lattice computations and law sweeps."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and validate object files")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("adjoint", help="compute an adjoint of a named map")
    p.add_argument("files", nargs="+")
    p.add_argument("--name", required=True)
    p.add_argument(
        "--direction",
        default="right",
        choices=["right", "left", "dagger", "dualize"],
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("hom", help="enumerate a Hom-set between two lattices")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--cls", default="join")
    p.add_argument("--files", nargs="*", default=[])
    p.add_argument("--max-size", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("count", help="count morphisms at an enrichment level")
    p.add_argument("category", choices=["PS", "BS", "TS", "FS"])
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--files", nargs="*", default=[])
    p.add_argument("--max-size", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("closure", help="closure data for a map or space")
    p.add_argument("files", nargs="+")
    p.add_argument("--map")
    p.add_argument("--space")
    p.add_argument("--subset", help="comma separated point labels")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("equiv", help="run the equivalence roundtrips")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("witness", help="emit the strictness witness for an element")
    p.add_argument("lattice")
    p.add_argument("element")
    p.add_argument("--files", nargs="*", default=[])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("suite", help="run the full proposition sweep")
    p.add_argument("corpus", nargs="?", help="directory of corpus files")
    p.add_argument("--json", action="store_true")
    p.add_argument("--filter")
    p.add_argument("--max-size", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except SizeLimit as exc:
        print("size limit: %s" % exc, file=sys.stderr)
        return EXIT_SIZE
    except LatkitError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

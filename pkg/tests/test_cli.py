"""Command-line interface: subcommands and exit codes."""

import json

import pytest

from latkit import cli, corpus, io, suite

DOC = """
lattice D4
elements: 0 a b 1
covers: 0<a 0<b a<1 b<1
ortho: 0->1 a->b b->a 1->0

lattice C2
elements: 0 1
covers: 0<1

map f : D4 -> C2
0 |-> 0
a |-> 0
b |-> 1
1 |-> 1
"""


@pytest.fixture
def doc_file(tmp_path):
    path = tmp_path / "objects.lat"
    path.write_text(DOC)
    return str(path)


def test_check_passes(doc_file, capsys):
    assert cli.main(["check", doc_file]) == 0
    out = capsys.readouterr().out
    assert "PASS lattice D4" in out
    assert "PASS map f" in out


def test_check_json(doc_file, capsys):
    assert cli.main(["check", doc_file, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert any(entry["object"] == "f" for entry in payload)


def test_check_flags_non_isotone_map(tmp_path, capsys):
    path = tmp_path / "bad.lat"
    path.write_text(
        DOC + "\nmap g : C2 -> C2\n0 |-> 1\n1 |-> 0\n"
    )
    assert cli.main(["check", str(path)]) == 1
    assert "FAIL map g" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "cycle.lat"
    path.write_text("lattice A\nelements: x y\ncovers: x<y y<x\n")
    assert cli.main(["check", str(path)]) == 2
    assert "parse error" in capsys.readouterr().err


def test_validation_error_exit_code(tmp_path, capsys):
    path = tmp_path / "ortho.lat"
    path.write_text("lattice A\nelements: 0 1\ncovers: 0<1\northo: 0->0 1->1\n")
    assert cli.main(["check", str(path)]) == 1
    assert "OrthoAxiomFailed" in capsys.readouterr().err


def test_adjoint_right_and_dagger(doc_file, capsys):
    assert cli.main(["adjoint", doc_file, "--name", "f"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("map f_right : C2 -> D4")
    # The dagger needs ortho tables on both sides; C2 has none in the doc.
    assert cli.main(["adjoint", doc_file, "--name", "f", "--direction", "dagger"]) == 1


def test_hom_counts_against_library(doc_file, capsys):
    assert cli.main(["hom", "D4", "C2", "--files", doc_file, "--json"]) == 0
    tables = json.loads(capsys.readouterr().out)
    from latkit.maps import hom_set

    d4 = corpus.named_lattices()["D4"]
    c2 = corpus.named_lattices()["C2"]
    assert len(tables) == len(hom_set(d4, c2, "join"))


def test_hom_size_guard(capsys):
    assert cli.main(["hom", "B16", "B16", "--max-size", "8"]) == 3
    assert "size limit" in capsys.readouterr().err


def test_count_builtin_corpus(capsys):
    assert cli.main(["count", "FS", "C2", "D4"]) == 0
    assert capsys.readouterr().out.strip() == "8"
    assert cli.main(["count", "TS", "D4", "C2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 4


def test_closure_fixed_points(doc_file, capsys):
    assert cli.main(["closure", doc_file, "--map", "f"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("fixed:")


def test_closure_of_space_subset(tmp_path, capsys):
    path = tmp_path / "space.cspace"
    path.write_text("cspace S\npoints: p q r\nclosed: {} {p} {q} {r} {p,q}\n")
    assert cli.main(["closure", str(path), "--space", "S", "--subset", "p,r"]) == 0
    assert capsys.readouterr().out.strip() == "closure: p q r"


def test_equiv_roundtrips(doc_file, capsys):
    assert cli.main(["equiv", doc_file]) == 0
    out = capsys.readouterr().out
    assert "PASS D4" in out and "PASS D4(ortho)" in out


def test_witness_reports_basedness(capsys):
    assert cli.main(["witness", "M3", "a", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["coherent_with_identity"] is True
    assert payload["based"] is False
    assert cli.main(["witness", "D4", "a", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["based"] is True


def test_witness_unknown_element(capsys):
    assert cli.main(["witness", "D4", "zzz"]) == 2


def test_suite_on_small_corpus_dir(tmp_path, capsys):
    (tmp_path / "C2.lat").write_text("lattice C2\nelements: 0 1\ncovers: 0<1\n")
    (tmp_path / "C3.lat").write_text("lattice C3\nelements: 0 m 1\ncovers: 0<m m<1\n")
    assert cli.main(["suite", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out.splitlines()[-1]


def test_suite_filter_and_json(tmp_path, capsys):
    (tmp_path / "C2.lat").write_text("lattice C2\nelements: 0 1\ncovers: 0<1\n")
    assert (
        cli.main(["suite", str(tmp_path), "--filter", "adjoint-laws", "--json"]) == 0
    )
    reports = json.loads(capsys.readouterr().out)
    assert reports
    assert all(report["prop"] == "adjoint-laws" for report in reports)
    assert all(
        set(report) <= {"prop", "object", "status", "witness", "millis"}
        for report in reports
    )


def test_suite_flags_corrupted_corpus(tmp_path, capsys):
    (tmp_path / "C2.lat").write_text("lattice C2\nelements: 0 1\ncovers: 0<1\n")
    (tmp_path / "bad.lat").write_text(
        "lattice BAD\nelements: 0 1\ncovers: 0<1\northo: 0->0 1->1\n"
    )
    assert cli.main(["suite", str(tmp_path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL corpus-validate bad.lat" in out


def test_write_corpus_parses_back(tmp_path):
    written = suite.write_corpus(str(tmp_path))
    assert written
    bundle, failures = suite.load_corpus_dir(str(tmp_path))
    assert not failures
    assert set(bundle["lattices"]) == set(corpus.named_lattices())
    assert set(bundle["orthos"]) == set(corpus.ortho_lattices())

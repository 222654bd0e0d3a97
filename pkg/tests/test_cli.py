"""Tests for the spec-file parser, JSON documents and command-line exit codes."""

import json
import sys
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parents[1]
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from src.cli.corpus import run_corpus, run_entry  # type: ignore  # noqa: E402
from src.cli.main import main  # type: ignore  # noqa: E402
from src.cli.parser import load_spec, parse_curve_spec  # type: ignore  # noqa: E402
from src.cli.schemas import (  # type: ignore  # noqa: E402
    CorpusDoc,
    FamilyDoc,
    H1Doc,
    MonomialOracleDoc,
    OracleDoc,
    SemigroupDoc,
    Section6Doc,
    rational_str,
)
from src.derham.h1 import h1_dimension  # type: ignore  # noqa: E402
from src.errors import CurveNotReducedError, SpecSyntaxError  # type: ignore  # noqa: E402
from src.family.scan import family_scan  # type: ignore  # noqa: E402
from src.family.section6 import section6_family  # type: ignore  # noqa: E402
from src.family.spec import FamilySpec  # type: ignore  # noqa: E402
from src.oracle.presentation import presentation_for_curve  # type: ignore  # noqa: E402
from src.oracle.semigroup import MonomialCurve, semigroup_data  # type: ignore  # noqa: E402
from src.oracle.truncated import truncated_h1, truncated_mu_prime  # type: ignore  # noqa: E402
from src.topology.curve import CurveSpec  # type: ignore  # noqa: E402

CORPUS = root_dir / "data" / "corpus"
QUIET = ["--log-level", "ERROR"]


def write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run_json(capsys, *argv: str):
    code = main(QUIET + list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


# -- parser -----------------------------------------------------------------

def test_parse_curve_file() -> None:
    spec = parse_curve_spec("# cusp\nring: x, y\nfactor: y^2 - x^3\nweights: 2, 3\nname: cusp\n")
    assert isinstance(spec, CurveSpec)
    assert spec.weights == (2, 3)
    assert spec.name == "cusp"


def test_factor_lines_are_kept_as_written() -> None:
    spec = parse_curve_spec("ring: x, y\nfactor: (y - x)(y + x)\n")
    assert len(spec.factors) == 1
    assert len(spec.irreducible_components().factors) == 2


def test_parse_family_and_monomial_files() -> None:
    fam = parse_curve_spec("ring: x, y\nmap: y^2 - x^3\ntag: tame\n")
    assert isinstance(fam, FamilySpec)
    assert fam.tame and fam.lci
    curve = parse_curve_spec("tag: monomial(3, 4, 5)\n")
    assert isinstance(curve, MonomialCurve)
    assert curve.variables == ("x", "y", "z")


@pytest.mark.parametrize(
    "text, kind, line",
    [
        ("factor: y - x\n", "syntax error", 1),
        ("ring: x, y\ncolour: red\n", "syntax error", 2),
        ("ring: x, y\nfactor: x - x\n", "zero factor", 2),
        ("ring: x, y\nfactor: x + z\n", "unknown variable", 2),
        ("ring: x, y\nfactor: x\ntag: smooth\n", "syntax error", 3),
        ("ring: x, y\n# nothing else\n", "syntax error", 2),
        ("ring: x, y\nfactor: x\nweights: 1\n", "syntax error", 3),
        ("ring: x, x\n", "syntax error", 1),
        ("ring: x, y\nmap: x\nmap: y\n", "syntax error", 4),
        ("ring: x, y\nfactor: 3\n", "syntax error", 2),
    ],
)
def test_parse_errors(text: str, kind: str, line: int) -> None:
    with pytest.raises(SpecSyntaxError) as err:
        parse_curve_spec(text)
    assert err.value.kind == kind
    assert err.value.line == line


def test_unknown_variable_column() -> None:
    with pytest.raises(SpecSyntaxError) as err:
        parse_curve_spec("ring: x, y\nfactor: x + z\n")
    assert err.value.column == 13


def test_non_reduced_factors() -> None:
    with pytest.raises(CurveNotReducedError):
        parse_curve_spec("ring: x, y\nfactor: x\nfactor: 2x\n")


# -- documents --------------------------------------------------------------

def test_h1_document_round_trip() -> None:
    spec = parse_curve_spec("ring: x, y\nfactor: y^2 - x^3 - x^2\n")
    doc = H1Doc.from_report(str(spec), h1_dimension(spec))
    assert H1Doc.model_validate_json(doc.model_dump_json()) == doc
    assert doc.verdict == "unchecked"
    assert doc.singularities[0].point == ["0", "0"]


def test_rationals_are_written_as_fractions() -> None:
    assert rational_str(0) == "0/1"
    assert rational_str(-4) == "-4/1"


def assert_round_trip(doc) -> None:
    assert type(doc).model_validate_json(doc.model_dump_json()) == doc


def test_oracle_documents_round_trip() -> None:
    spec = parse_curve_spec("ring: x, y\nfactor: y^2 - x^3\nweights: 2, 3\n")
    assert_round_trip(OracleDoc.from_result(truncated_h1(presentation_for_curve(spec), degree_bound=20)))
    assert_round_trip(SemigroupDoc.from_data(semigroup_data((3, 4, 5))))
    assert_round_trip(SemigroupDoc.from_data(load_spec(CORPUS / "monomial_345.curve").semigroup()))
    curve = MonomialCurve(("x", "y"), (3, 4))
    pres = curve.presentation()
    doc = MonomialOracleDoc(
        curve="monomial",
        semigroup=SemigroupDoc.from_data(curve.semigroup()),
        relations=[str(r) for r in pres.relations],
        oracle=OracleDoc.from_result(truncated_mu_prime(pres, degree_bound=24)),
    )
    assert_round_trip(doc)


@pytest.mark.parametrize("name, h_f", [("node_family", 1), ("cusp_family", 2)])
def test_family_document_round_trip(name: str, h_f: int) -> None:
    fam = load_spec(CORPUS / f"{name}.family")
    doc = FamilyDoc.from_report(name, family_scan(fam, seed=3))
    assert_round_trip(doc)
    assert (doc.h_f, doc.special_values) == (h_f, ["0/1"])


def test_corpus_document_round_trip(tmp_path: Path) -> None:
    write(tmp_path, "line.curve", "ring: x, y\nfactor: y - x\n")
    manifest = {"entries": [{"name": "line", "file": "line.curve", "oracle": False, "expected": {"h1": 0}}]}
    (tmp_path / "manifest.json").write_text(json.dumps(manifest), encoding="utf-8")
    doc = run_corpus(tmp_path, jobs=1, progress=False)
    assert isinstance(doc, CorpusDoc)
    assert_round_trip(doc)


@pytest.mark.slow
def test_section6_reports_are_reproducible() -> None:
    first = Section6Doc.from_report(family_scan(section6_family(), seed=0))
    second = Section6Doc.from_report(family_scan(section6_family(), seed=0))
    assert first.model_dump_json() == second.model_dump_json()
    assert_round_trip(first)


# -- commands ---------------------------------------------------------------

def test_invariants_json(tmp_path: Path, capsys) -> None:
    path = write(tmp_path, "node.curve", "ring: x, y\nfactor: x\nfactor: y\n")
    code, doc = run_json(capsys, "invariants", path, "--oracle")
    assert code == 0
    assert (doc["b0"], doc["b1"], doc["sum_mu_prime"], doc["h1_formula"]) == (1, 0, 1, 1)
    assert doc["h1_oracle"]["value"] == 1
    assert doc["h1_oracle"]["stabilized"]
    assert doc["verdict"] == "agree"


def test_oracle_json_for_monomial_curve(tmp_path: Path, capsys) -> None:
    path = write(tmp_path, "branch.curve", "tag: monomial(2, 3)\n")
    code, doc = run_json(capsys, "oracle", path, "--germ", "--degree-bound", "16")
    assert code == 0
    assert doc["semigroup"]["gaps"] == [1]
    assert doc["oracle"]["value"] == 2


def test_usage_errors_exit_1(tmp_path: Path, capsys) -> None:
    assert main(QUIET) == 1
    assert main(QUIET + ["invariants", str(tmp_path / "missing.curve")]) == 1
    fam = write(tmp_path, "f.family", "ring: x, y\nmap: xy\n")
    assert main(QUIET + ["invariants", fam]) == 1
    curve = write(tmp_path, "c.curve", "ring: x, y\nfactor: xy\n")
    assert main(QUIET + ["family", curve]) == 1
    capsys.readouterr()


def test_syntax_error_json(tmp_path: Path, capsys) -> None:
    path = write(tmp_path, "bad.curve", "ring: x, y\nfactor: x +\n")
    code, doc = run_json(capsys, "invariants", path)
    assert code == 1
    assert doc["error"]["kind"] == "syntax error"
    assert doc["error"]["line"] == 2


def test_computation_error_exit_2(tmp_path: Path, capsys) -> None:
    path = write(tmp_path, "double.curve", "ring: x, y\nfactor: x^2*y\n")
    code, doc = run_json(capsys, "invariants", path)
    assert code == 2
    assert doc["error"]["kind"] == "curve not reduced"


def test_invalid_utf8_is_a_syntax_error(tmp_path: Path, capsys) -> None:
    path = tmp_path / "bad.curve"
    path.write_bytes(b"ring: x, y\nfactor: y^2 - x^3 \xff\xfe\n")
    code, doc = run_json(capsys, "invariants", str(path))
    assert code == 1
    assert doc["error"]["kind"] == "syntax error"
    assert (doc["error"]["line"], doc["error"]["column"]) == (2, 19)


def test_unexpected_failure_still_reports_json(tmp_path: Path, capsys, monkeypatch) -> None:
    def broken(*args, **kwargs):
        raise RuntimeError("lost the staircase")

    monkeypatch.setattr("src.cli.main.h1_dimension", broken)
    path = write(tmp_path, "line.curve", "ring: x, y\nfactor: y - x\n")
    code, doc = run_json(capsys, "invariants", path)
    assert code == 2
    assert doc["error"] == {"kind": "internal error", "message": "lost the staircase", "line": None, "column": None}


def test_family_json(tmp_path: Path, capsys) -> None:
    path = write(tmp_path, "node.family", "ring: x, y\nmap: xy\n")
    code, doc = run_json(capsys, "family", path, "--seed", "3")
    assert code == 0
    assert doc["h_f"] == 1
    assert doc["special_values"] == ["0/1"]
    assert [v["verdict"] for v in doc["semicontinuity"]] == ["holds"]


@pytest.mark.slow
def test_example_section6(capsys) -> None:
    code, doc = run_json(capsys, "example-section6")
    assert code == 0
    assert (doc["h_f"], doc["h1_at_0"], doc["semicontinuity"], doc["lci"]) == (0, 2, "fails", False)


# -- golden corpus ----------------------------------------------------------

def test_corpus_entry_with_expected_error() -> None:
    entry = {"name": "nonreduced", "file": "nonreduced.curve", "expected_error": "curve not reduced"}
    assert run_entry(entry, CORPUS).status == "ok"


def test_corpus_entry_mismatch(tmp_path: Path) -> None:
    write(tmp_path, "line.curve", "ring: x, y\nfactor: y - x\n")
    entry = {"name": "line", "file": "line.curve", "oracle": False, "expected": {"h1": 5}}
    result = run_entry(entry, tmp_path)
    assert result.status == "mismatch"
    assert "h1" in result.message


def test_corpus_command_exit_3_on_mismatch(tmp_path: Path, capsys) -> None:
    write(tmp_path, "line.curve", "ring: x, y\nfactor: y - x\n")
    manifest = {"entries": [
        {"name": "line", "file": "line.curve", "oracle": False, "expected": {"h1": 0}},
        {"name": "wrong", "file": "line.curve", "oracle": False, "expected": {"b1": 1}},
    ]}
    (tmp_path / "manifest.json").write_text(json.dumps(manifest), encoding="utf-8")
    code, doc = run_json(capsys, "corpus", "--corpus-dir", str(tmp_path))
    assert code == 3
    assert [e["status"] for e in doc["entries"]] == ["ok", "mismatch"]
    assert doc["mismatches"] == 1


@pytest.mark.slow
def test_bundled_corpus_is_green() -> None:
    doc = run_corpus(CORPUS, jobs=1, progress=False)
    failing = [(e.name, e.message) for e in doc.entries if e.status != "ok"]
    assert failing == []
    assert len(doc.entries) >= 10


@pytest.mark.slow
def test_corpus_runs_are_deterministic() -> None:
    serial = run_corpus(CORPUS, jobs=1, progress=False)
    parallel = run_corpus(CORPUS, jobs=2, progress=False)
    assert serial.model_dump_json() == parallel.model_dump_json()

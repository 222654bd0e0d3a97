"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from ..config import CORPUS_DIR, DEFAULT_DEGREE_BOUND, FAMILY_PARAMS, LOG_LEVEL
from ..derham.h1 import DISAGREE, h1_dimension
from ..errors import CurveH1Error, DomainError, SpecSyntaxError
from ..family.scan import family_scan
from ..family.section6 import section6_family
from ..family.spec import FAILS, FamilySpec
from ..logging_conf import setup_logging
from ..oracle.presentation import AlgebraPresentation, presentation_for_curve
from ..oracle.semigroup import MonomialCurve
from ..oracle.truncated import truncated_h1, truncated_mu_prime
from ..topology.curve import CurveSpec
from .corpus import run_corpus
from .parser import ParsedSpec, load_spec
from .schemas import (
    CorpusDoc,
    ErrorDoc,
    ErrorEnvelope,
    FamilyDoc,
    H1Doc,
    MonomialOracleDoc,
    OracleDoc,
    SemigroupDoc,
    Section6Doc,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    """Bad command line or a spec file of the wrong kind."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


class _Output:
    def __init__(self, as_json: bool) -> None:
        self.as_json = as_json
        self.console = Console()

    def document(self, doc: BaseModel, render: Callable[[Console, BaseModel], None]) -> None:
        if self.as_json:
            sys.stdout.write(doc.model_dump_json(indent=2) + "\n")
        else:
            render(self.console, doc)

    def error(self, exc: Exception, kind: Optional[str] = None) -> None:
        doc = ErrorDoc.from_exception(exc, kind)
        if self.as_json:
            sys.stdout.write(ErrorEnvelope(error=doc).model_dump_json(indent=2) + "\n")
        else:
            where = f" (line {doc.line}, column {doc.column})" if doc.line else ""
            Console(stderr=True).print(f"[bold red]error[/]: {doc.kind}: {doc.message}{where}")


# -- renderers ---------------------------------------------------------------

def _render_h1(console: Console, doc: H1Doc) -> None:
    table = Table(title=f"H1 of {doc.curve}")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for key in ("b0", "b1", "chi", "sum_mu_prime", "h1_formula"):
        table.add_row(key, str(getattr(doc, key)))
    if doc.h1_oracle is not None:
        flag = "stabilized" if doc.h1_oracle.stabilized else "not stabilized"
        table.add_row("h1_oracle", f"{doc.h1_oracle.value} ({flag}, bound {doc.h1_oracle.degree_bound})")
    table.add_row("verdict", doc.verdict)
    console.print(table)
    if doc.singularities:
        sing = Table(title="singular points")
        for col in ("point", "field", "orbit", "mu", "r", "delta", "mu'"):
            sing.add_column(col)
        for s in doc.singularities:
            sing.add_row(
                "(" + ", ".join(s.point) + ")", s.field, str(s.orbit_size), str(s.mu),
                str(s.branches), str(s.delta), str(s.mu_prime),
            )
        console.print(sing)


def _render_oracle(console: Console, doc: BaseModel) -> None:
    oracle = doc.oracle if isinstance(doc, MonomialOracleDoc) else doc
    if isinstance(doc, MonomialOracleDoc):
        console.print(f"semigroup <{', '.join(map(str, doc.semigroup.generators))}>: "
                      f"gaps {doc.semigroup.gaps}, conductor {doc.semigroup.conductor}")
    table = Table(title=f"oracle ({'graded' if oracle.graded else 'filtered'})")
    table.add_column("degree", justify="right")
    table.add_column("increment", justify="right")
    for row in oracle.per_degree:
        if row.increment:
            table.add_row(str(row.degree), str(row.increment))
    console.print(table)
    console.print(f"value {oracle.value}, stabilized {oracle.stabilized}, bound {oracle.degree_bound}")


def _render_family(console: Console, doc: FamilyDoc) -> None:
    console.print(f"family {doc.family}: h_f = {doc.h_f}, special values {doc.special_values or '[]'}")
    if doc.irrational_special_values:
        console.print(f"irrational special values: {', '.join(doc.irrational_special_values)}")
    table = Table(title="fibers")
    for col in ("y", "generic", "reduced", "finite sing", "h1"):
        table.add_column(col)
    for f in doc.fibers:
        table.add_row(f.y, str(f.generic), str(f.reduced), str(f.finite_singular), str(f.h1))
    console.print(table)
    for v in doc.semicontinuity:
        console.print(f"h1({v.y}) = {v.h1} <= h_f = {v.h_f}: {v.verdict} (lci={v.lci})")
    if doc.tame_check is not None:
        console.print(f"tame check: mu = {doc.tame_check.mu}, consistent {doc.tame_check.consistent}")


def _render_section6(console: Console, doc: Section6Doc) -> None:
    console.print(
        f"h_f = {doc.h_f}, h1(f^-1(0)) = {doc.h1_at_0}, semicontinuity {doc.semicontinuity}, lci = {doc.lci}"
    )
    _render_family(console, doc.report)


def _render_corpus(console: Console, doc: CorpusDoc) -> None:
    table = Table(title="golden corpus")
    for col in ("entry", "kind", "status", "note"):
        table.add_column(col)
    for e in doc.entries:
        style = "green" if e.status == "ok" else "red"
        table.add_row(e.name, e.kind, f"[{style}]{e.status}[/]", e.message or "")
    console.print(table)
    console.print(f"{doc.mismatches} mismatches")


# -- commands ----------------------------------------------------------------

def _curve_from(spec: ParsedSpec) -> CurveSpec:
    if isinstance(spec, CurveSpec):
        return spec
    if isinstance(spec, MonomialCurve):
        if len(spec.generators) != 2:
            raise DomainError(f"monomial curve {spec.generators} is not a plane curve")
        (relation,) = spec.presentation().relations.generators
        return CurveSpec(spec.variables, (relation,), weights=spec.generators, name=spec.name)
    raise UsageError("expected a curve file, got a family file")


def cmd_invariants(args: argparse.Namespace, out: _Output) -> int:
    spec = _curve_from(load_spec(args.file))
    report = h1_dimension(spec, with_oracle=args.oracle, degree_bound=args.degree_bound)
    out.document(H1Doc.from_report(str(spec), report), _render_h1)
    return EXIT_MISMATCH if report.verdict == DISAGREE else EXIT_OK


def cmd_oracle(args: argparse.Namespace, out: _Output) -> int:
    spec = load_spec(args.file)
    run = truncated_mu_prime if args.germ else truncated_h1
    if isinstance(spec, MonomialCurve):
        pres = spec.presentation()
        result = run(pres, args.degree_bound)
        doc = MonomialOracleDoc(
            curve=spec.name or "monomial",
            semigroup=SemigroupDoc.from_data(spec.semigroup()),
            relations=[str(r) for r in pres.relations],
            oracle=OracleDoc.from_result(result),
        )
        out.document(doc, _render_oracle)
        return EXIT_OK
    curve = _curve_from(spec)
    if args.germ:
        pres = AlgebraPresentation.build(curve.variables, [curve.product], curve.weights)
    else:
        pres = presentation_for_curve(curve)
    out.document(OracleDoc.from_result(run(pres, args.degree_bound)), _render_oracle)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, out: _Output) -> int:
    fam = load_spec(args.file)
    if not isinstance(fam, FamilySpec):
        raise UsageError("expected a family file with a 'map:' line")
    report = family_scan(fam, args.seed)
    out.document(FamilyDoc.from_report(fam.name or str(fam.f), report), _render_family)
    tame_failed = report.tame is not None and not report.tame.consistent
    return EXIT_MISMATCH if report.violations or tame_failed else EXIT_OK


def cmd_section6(args: argparse.Namespace, out: _Output) -> int:
    report = family_scan(section6_family(), args.seed)
    doc = Section6Doc.from_report(report)
    out.document(doc, _render_section6)
    reproduced = doc.h_f == 0 and doc.h1_at_0 == 2 and doc.semicontinuity == FAILS and not doc.lci
    return EXIT_OK if reproduced else EXIT_MISMATCH


def cmd_corpus(args: argparse.Namespace, out: _Output) -> int:
    doc = run_corpus(args.corpus_dir, jobs=args.jobs, progress=not args.json)
    out.document(doc, _render_corpus)
    return EXIT_MISMATCH if doc.mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="curve-h1", description="H1 of affine plane curves and families.")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="logging level (default from config)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("invariants", help="b1, singularities and h1 of a curve")
    p.add_argument("file", type=Path)
    p.add_argument("--oracle", action="store_true", help="also run the truncated-degree oracle")
    p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("oracle", help="truncated-degree dim of 1-forms modulo exact forms")
    p.add_argument("file", type=Path)
    p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    p.add_argument("--germ", action="store_true", help="local mu' of the germ at the origin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("family", help="generic h1 and semicontinuity for a family f = y")
    p.add_argument("file", type=Path)
    p.add_argument("--seed", type=int, default=FAMILY_PARAMS["seed"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("example-section6", help="the non-lci surface counterexample")
    p.add_argument("--seed", type=int, default=FAMILY_PARAMS["seed"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_section6)

    p = sub.add_parser("corpus", help="run the bundled golden corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corpus-dir", type=Path, default=CORPUS_DIR)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_corpus)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = _Output(as_json="--json" in argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        out.error(exc)
        return EXIT_USAGE
    setup_logging(level=args.log_level.upper())
    try:
        return args.handler(args, out)
    except (UsageError, SpecSyntaxError, OSError) as exc:
        out.error(exc)
        return EXIT_USAGE
    except CurveH1Error as exc:
        logger.debug("computation failed", exc_info=True)
        out.error(exc)
        return EXIT_COMPUTATION
    except Exception as exc:
        logger.exception("unexpected failure in %s", args.command)
        out.error(exc, kind="internal error")
        return EXIT_COMPUTATION

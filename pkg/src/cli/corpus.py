"""Golden corpus runner: every manifest entry is recomputed and compared."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Any, Dict, List, Optional

from tqdm import tqdm

from ..config import CORPUS_DIR, DEFAULT_DEGREE_BOUND
from ..derham.h1 import DISAGREE, h1_dimension, is_disjoint_lines
from ..errors import CurveH1Error
from ..family.scan import family_scan
from ..family.section6 import section6_family
from ..family.spec import FamilySpec
from ..oracle.semigroup import MonomialCurve
from ..oracle.truncated import truncated_mu_prime
from ..topology.curve import CurveSpec
from ..utils.io import read_json
from .parser import load_spec
from .schemas import CorpusDoc, CorpusEntryDoc, rational_str

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


def _observe_curve(spec: CurveSpec, entry: Dict[str, Any]) -> Dict[str, Any]:
    bound = entry.get("degree_bound", DEFAULT_DEGREE_BOUND)
    report = h1_dimension(spec, with_oracle=entry.get("oracle", True), degree_bound=bound)
    observed: Dict[str, Any] = {
        "b0": report.b0,
        "b1": report.b1,
        "chi": report.chi,
        "sum_mu_prime": report.sum_mu_prime,
        "h1": report.h1_formula,
        "singular_points": sum(r.orbit_size for r in report.singularities),
        "disjoint_lines": is_disjoint_lines(spec, report),
        "verdict": report.verdict,
    }
    if report.h1_oracle is not None:
        observed["oracle"] = report.h1_oracle.value
    return observed


def _observe_family(fam: FamilySpec, entry: Dict[str, Any]) -> Dict[str, Any]:
    report = family_scan(fam, entry.get("seed"))
    observed: Dict[str, Any] = {
        "h_f": report.h_f,
        "special_values": [rational_str(y) for y in report.special_values],
        "violations": len(report.violations),
        "verdicts": [v.verdict for v in report.semicontinuity],
    }
    for rec in report.fibers:
        if rec.y == 0 and not rec.generic and rec.h1 is not None:
            observed["h1_at_0"] = rec.h1
    if report.tame is not None:
        observed["tame_consistent"] = report.tame.consistent
    return observed


def _observe_monomial(curve: MonomialCurve, entry: Dict[str, Any]) -> Dict[str, Any]:
    data = curve.semigroup()
    observed: Dict[str, Any] = {"gaps": len(data.gaps), "conductor": data.conductor}
    if entry.get("oracle", False):
        result = truncated_mu_prime(curve.presentation(), entry.get("degree_bound", DEFAULT_DEGREE_BOUND))
        observed["mu_prime"] = result.value
    return observed


def run_entry(entry: Dict[str, Any], corpus_dir: Path) -> CorpusEntryDoc:
    """Recompute one manifest entry; exceptions become ``error`` or expected-error results."""
    name = entry["name"]
    kind = entry.get("kind", "curve")
    expected = dict(entry.get("expected", {}))
    expected_error = entry.get("expected_error")
    try:
        if kind == "section6":
            observed = _observe_family(section6_family(), entry)
        else:
            spec = load_spec(corpus_dir / entry["file"])
            if isinstance(spec, FamilySpec):
                observed = _observe_family(spec, entry)
            elif isinstance(spec, MonomialCurve):
                observed = _observe_monomial(spec, entry)
            else:
                observed = _observe_curve(spec, entry)
    except CurveH1Error as exc:
        if expected_error == exc.kind:
            return CorpusEntryDoc(name=name, kind=kind, status="ok", expected={"error": expected_error},
                                  observed={"error": exc.kind}, message=exc.message)
        logger.error("corpus entry %s failed: %s", name, exc)
        return CorpusEntryDoc(name=name, kind=kind, status="error", expected=expected, message=str(exc))
    if expected_error:
        return CorpusEntryDoc(name=name, kind=kind, status="mismatch", expected={"error": expected_error},
                              observed=observed, message="expected an error")
    mismatched = [k for k, v in expected.items() if observed.get(k) != v]
    if observed.get("verdict") == DISAGREE:
        mismatched.append("verdict")
    status = "mismatch" if mismatched else "ok"
    message = f"mismatched: {', '.join(mismatched)}" if mismatched else None
    return CorpusEntryDoc(name=name, kind=kind, status=status, expected=expected, observed=observed,
                          message=message)


def run_corpus(corpus_dir: Optional[Path] = None, jobs: int = 1, progress: bool = True) -> CorpusDoc:
    """Run every manifest entry; results keep manifest order whatever ``jobs`` is."""
    corpus_dir = Path(corpus_dir or CORPUS_DIR)
    entries: List[Dict[str, Any]] = read_json(corpus_dir / MANIFEST)["entries"]
    results: List[Optional[CorpusEntryDoc]] = [None] * len(entries)
    bar = tqdm(total=len(entries), desc="corpus", disable=not progress)
    if jobs <= 1:
        for i, entry in enumerate(entries):
            results[i] = run_entry(entry, corpus_dir)
            bar.update(1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(run_entry, entry, corpus_dir): i for i, entry in enumerate(entries)}
            for future in as_completed(futures):
                results[futures[future]] = future.result()
                bar.update(1)
    bar.close()
    done = [r for r in results if r is not None]
    mismatches = sum(1 for r in done if r.status != "ok")
    logger.info("corpus: %d entries, %d mismatches", len(done), mismatches)
    return CorpusDoc(entries=done, mismatches=mismatches)

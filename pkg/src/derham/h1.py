"""``dim H¹(C) = b₁(C) + Σ μ′(C, x)`` for reduced plane curves.

The right-hand side comes from topology (``b₁``) and the singularity census
(``μ′``).  The left-hand side is optionally recomputed by the truncated-degree
oracle and compared.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..config import DEFAULT_DEGREE_BOUND
from ..errors import InconsistentSingularityDataError
from ..groebner.solve import AlgebraicPoint
from ..oracle.presentation import AlgebraPresentation, presentation_for_curve
from ..oracle.truncated import OracleResult, truncated_h1, truncated_mu_prime
from ..singular.census import SingularityRecord, singularity_census
from ..singular.milnor import local_milnor
from ..topology.betti import TopologyReport, betti_numbers
from ..topology.curve import CurveSpec

logger = logging.getLogger(__name__)

AGREE = "agree"
DISAGREE = "disagree"
ORACLE_UNSTABLE = "oracle-unstable"
UNCHECKED = "unchecked"


@dataclass
class H1Report:
    b0: int
    b1: int
    chi: int
    singularities: List[SingularityRecord]
    sum_mu_prime: int
    h1_formula: int
    h1_oracle: Optional[OracleResult] = None
    verdict: str = UNCHECKED
    topology: Optional[TopologyReport] = None

    def __post_init__(self) -> None:
        if self.h1_formula != self.b1 + self.sum_mu_prime:
            raise InconsistentSingularityDataError(
                f"h1_formula {self.h1_formula} != b1 {self.b1} + sum mu' {self.sum_mu_prime}"
            )


@dataclass(frozen=True)
class MuPrime:
    value: int
    source: str
    oracle: Optional[OracleResult] = None


def local_mu_prime(
    pres: AlgebraPresentation, lci: bool = False, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> MuPrime:
    """Local μ′ of a germ at the origin.

    μ′ equals the Milnor number only for complete intersections, and the Milnor
    number is computed here for plane germs alone.  Every other germ, tagged
    ``lci`` or not, goes to the truncated oracle.
    """
    if len(pres.variables) == 2 and len(pres.relations) == 1:
        (f,) = pres.relations.generators
        mu = local_milnor(f, AlgebraicPoint(None, (0, 0)))
        return MuPrime(mu, "milnor")
    if lci:
        logger.info("lci germ in %d variables: mu' taken from the oracle", len(pres.variables))
    result = truncated_mu_prime(pres, degree_bound)
    return MuPrime(result.value, "oracle", result)


def _verdict(formula: int, oracle: OracleResult) -> str:
    if not oracle.stabilized:
        return ORACLE_UNSTABLE
    return AGREE if oracle.value == formula else DISAGREE


def h1_dimension(
    spec: CurveSpec, with_oracle: bool = False, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> H1Report:
    """Assemble ``b₁ + Σ μ′`` and, optionally, the oracle's ``dim Ω¹/dA``.

    Args:
        spec: The reduced plane curve.
        with_oracle: Run ``truncated_h1`` and fill ``verdict``.
        degree_bound: Largest degree examined by the oracle.

    Returns:
        An ``H1Report``; ``verdict`` stays ``"unchecked"`` without the oracle.
    """
    spec = spec.irreducible_components()
    census = singularity_census(spec.product)
    topology = betti_numbers(spec, census)
    sum_mu_prime = sum(r.orbit_size * r.mu_prime for r in census)
    report = H1Report(
        b0=topology.b0,
        b1=topology.b1,
        chi=topology.chi,
        singularities=census,
        sum_mu_prime=sum_mu_prime,
        h1_formula=topology.b1 + sum_mu_prime,
        topology=topology,
    )
    if with_oracle:
        oracle = truncated_h1(presentation_for_curve(spec), degree_bound)
        report.h1_oracle = oracle
        report.verdict = _verdict(report.h1_formula, oracle)
        if report.verdict == DISAGREE:
            logger.warning("oracle gives %d but b1 + sum mu' = %d for %s", oracle.value, report.h1_formula, spec)
    logger.info("h1 of %s: %d (b1=%d, sum mu'=%d)", spec, report.h1_formula, report.b1, sum_mu_prime)
    return report


def is_disjoint_lines(spec: CurveSpec, report: Optional[H1Report] = None) -> bool:
    """True iff the curve is a disjoint union of affine lines, i.e. ``H¹ = 0``.

    Raises:
        InconsistentSingularityDataError: if the structural test (smooth rational
            components with one place at infinity, pairwise disjoint) disagrees
            with ``h1_formula = 0``.
    """
    report = report or h1_dimension(spec)
    components = report.topology.components
    structural = (
        not report.singularities
        and report.b0 == len(components)
        and all(c.genus == 0 and c.punctures == 1 and c.smooth for c in components)
    )
    if structural != (report.h1_formula == 0):
        raise InconsistentSingularityDataError(
            f"structural disjoint-lines test {structural} but h1 = {report.h1_formula}"
        )
    return structural

"""
Uniform growth constants for groups of bounded nilpotency degree, and a
numeric cross-check of the metabelian lower bound 2^(1/48)
"""
import logging
from decimal import Decimal
from typing import Literal, Optional

from pydantic import BaseModel

from certificates.witness import WitnessCertificate, witness_search
from core_groups.base import GroupRealization
from core_groups.realization import METABELIAN_NON_POLYCYCLIC
from freecalc.weights import f_bound
from growth_engine.ball import enumerate_ball
from growth_engine.growth import growth_table, omega_bounds
from shared.config import DEFAULT_CAP
from shared.errors import AssertionFailure, SpecValueError
from shared.numeric import integer_root, to_decimal

logger = logging.getLogger("GrowthBounds")


class DegreeBound(BaseModel):
    d: int
    s: int
    alpha: int
    beta: int
    omega_alpha: Decimal
    omega_beta: Decimal


def degree_bound(d: int, precision: int = 40) -> DegreeBound:
    """alpha = 3 * 4^(d+1) and the sharper beta = 2 f(2s), s = d + 1."""
    if d < 1:
        raise SpecValueError(f"degree must be >= 1, got {d}")
    s = d + 1
    alpha = 3 * 4 ** (d + 1)
    beta = 2 * f_bound(2 * s)
    if beta > alpha:
        raise AssertionFailure(f"beta = {beta} exceeds alpha = {alpha} at d = {d}")
    return DegreeBound(
        d=d,
        s=s,
        alpha=alpha,
        beta=beta,
        omega_alpha=to_decimal(integer_root(2, alpha, precision), precision),
        omega_beta=to_decimal(integer_root(2, beta, precision), precision),
    )


class CrosscheckReport(BaseModel):
    group: str
    status: Literal["PASSED", "FAILED", "NOT-APPLICABLE"]
    threshold: Decimal
    radius: int
    witness: Optional[WitnessCertificate] = None
    upper: Optional[Decimal] = None
    witness_margin: Optional[Decimal] = None
    upper_margin: Optional[Decimal] = None


def crosscheck_metabelian(
    r: GroupRealization,
    radius: int,
    p_max: int,
    max_word_len: int = 2,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    precision: int = 40,
) -> CrosscheckReport:
    threshold = degree_bound(1, precision).omega_alpha
    kind = r.spec.kind if r.spec is not None else r.kind
    if kind not in METABELIAN_NON_POLYCYCLIC:
        logger.info(f"{r.name} is not declared metabelian non-polycyclic; nothing to check")
        return CrosscheckReport(group=r.name, status="NOT-APPLICABLE", threshold=threshold, radius=radius)

    witness = witness_search(r, max_word_len, p_max, cap, precision)
    table = growth_table(enumerate_ball(r, radius, cap, workers))
    estimate = omega_bounds(table, precision, witness_lower=witness.omega_lower if witness else None)
    upper = estimate.upper_at(radius)

    witness_margin = witness.omega_lower - threshold if witness else None
    passed = witness is not None and witness_margin >= 0 and estimate.consistent and upper >= threshold
    report = CrosscheckReport(
        group=r.name,
        status="PASSED" if passed else "FAILED",
        threshold=threshold,
        radius=radius,
        witness=witness,
        upper=upper,
        witness_margin=witness_margin,
        upper_margin=upper - threshold,
    )
    if passed:
        logger.info(f"✅ {r.name}: omega >= {witness.omega_lower} >= {threshold} (margin {witness_margin})")
    else:
        logger.warning(f"⚠️  {r.name}: metabelian lower bound not confirmed")
    return report

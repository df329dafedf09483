"""
Growth tables and exponential growth rate bounds

gamma(n) = |ball of radius n|. By submultiplicativity the growth rate
omega = inf_n gamma(n)^(1/n), so every prefix minimum is a certified upper bound.
"""
import logging
from dataclasses import dataclass
from decimal import Decimal
from typing import List, Optional, Tuple

import mpmath as mp
from pydantic import BaseModel

from growth_engine.ball import Ball
from shared.errors import RadiusMismatchError, SpecValueError
from shared.numeric import integer_root, to_decimal

logger = logging.getLogger("GrowthEngine")


@dataclass(frozen=True)
class GrowthTable:
    spheres: Tuple[int, ...]
    gamma: Tuple[int, ...]
    radius: int
    label: str = ""

    def __post_init__(self):
        if len(self.spheres) != self.radius + 1 or len(self.gamma) != self.radius + 1:
            raise SpecValueError("growth table length does not match its radius")

    @classmethod
    def from_spheres(cls, spheres, label: str = "") -> "GrowthTable":
        gamma, total = [], 0
        for s in spheres:
            total += s
            gamma.append(total)
        return cls(tuple(spheres), tuple(gamma), len(spheres) - 1, label)


def growth_table(b: Ball) -> GrowthTable:
    return GrowthTable.from_spheres(b.sphere_sizes(), label=b.realization.name)


class GrowthEstimate(BaseModel):
    """upper[n-1] and naive[n-1] hold the values at radius n."""

    upper: List[Decimal]
    naive: List[Decimal]
    entropy_upper: Decimal
    witness_lower: Optional[Decimal] = None

    def upper_at(self, n: int) -> Decimal:
        return self.upper[n - 1]

    def naive_at(self, n: int) -> Decimal:
        return self.naive[n - 1]

    @property
    def consistent(self) -> bool:
        """witness_lower <= upper(n) at every radius (vacuous without a witness)."""
        return self.witness_lower is None or all(self.witness_lower <= u for u in self.upper)


def omega_bounds(t: GrowthTable, precision: int = 40, witness_lower: Optional[Decimal] = None) -> GrowthEstimate:
    if t.radius < 1:
        raise SpecValueError("growth rate bounds need radius >= 1")

    upper, naive = [], []
    best = None
    with mp.workdps(precision):
        for n in range(1, t.radius + 1):
            root = integer_root(t.gamma[n], n, precision)
            best = root if best is None or root < best else best
            naive.append(to_decimal(root, precision))
            upper.append(to_decimal(best, precision))
        entropy = to_decimal(mp.log(best), precision)

    estimate = GrowthEstimate(upper=upper, naive=naive, entropy_upper=entropy, witness_lower=witness_lower)
    if not estimate.consistent:
        logger.warning(f"⚠️  Witness lower bound {witness_lower} exceeds the upper bound {upper[-1]}")
    return estimate


class SubmultiplicativityViolation(BaseModel):
    m: int
    n: int
    gamma_sum: int
    product: int


def check_submultiplicative(t: GrowthTable) -> List[SubmultiplicativityViolation]:
    """Every violation is a bug in the enumeration; the inequality always holds."""
    violations = []
    for m in range(1, t.radius + 1):
        for n in range(m, t.radius - m + 1):
            lhs, rhs = t.gamma[m + n], t.gamma[m] * t.gamma[n]
            if lhs > rhs:
                violations.append(SubmultiplicativityViolation(m=m, n=n, gamma_sum=lhs, product=rhs))
    if violations:
        logger.error(f"❌ {len(violations)} submultiplicativity violations in {t.label or 'table'}")
    return violations


class QuotientRow(BaseModel):
    n: int
    gamma_group: int
    gamma_quotient: int
    holds: bool


class QuotientReport(BaseModel):
    radius: int
    rows: List[QuotientRow]
    violations: List[int]
    upper_consistent: bool
    identical: bool

    @property
    def ok(self) -> bool:
        return not self.violations and self.upper_consistent


def compare_quotient(g: GrowthTable, q: GrowthTable, precision: int = 40) -> QuotientReport:
    """gamma of a quotient is pointwise at most gamma of the group, so are the upper bounds."""
    if g.radius != q.radius:
        raise RadiusMismatchError(f"group table has radius {g.radius}, quotient table {q.radius}")

    rows = [
        QuotientRow(n=n, gamma_group=g.gamma[n], gamma_quotient=q.gamma[n], holds=q.gamma[n] <= g.gamma[n])
        for n in range(g.radius + 1)
    ]
    violations = [row.n for row in rows if not row.holds]

    upper_consistent = True
    if g.radius >= 1:
        ug, uq = omega_bounds(g, precision), omega_bounds(q, precision)
        upper_consistent = all(a <= b for a, b in zip(uq.upper, ug.upper))

    if violations:
        logger.warning(f"⚠️  Quotient exceeds group at radii {violations}")
    return QuotientReport(
        radius=g.radius,
        rows=rows,
        violations=violations,
        upper_consistent=upper_consistent,
        identical=g.gamma == q.gamma,
    )

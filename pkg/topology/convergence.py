"""
Local convergence of marked groups

Two marked groups are n-close when their labeled balls of radius n are
isomorphic. Along a converging sequence the growth counts gamma(m) agree
with the limit as soon as the balls of radius m do.
"""
import logging
from decimal import Decimal
from typing import List, Optional, Sequence

from pydantic import BaseModel

from core_groups.grigorchuk import OmegaSequence
from core_groups.realization import make_realization
from growth_engine.growth import GrowthTable, omega_bounds
from shared.config import DEFAULT_CAP
from shared.errors import AlphabetMismatchError, AssertionFailure, SpecValueError
from shared.schemas import GroupSpec
from topology.marked_ball import MarkedBall, balls_isomorphic, extract_marked_ball

logger = logging.getLogger("ConvergenceTracker")


def agreement_radius(a: MarkedBall, b: MarkedBall) -> int:
    """Largest n before the first radius where the balls differ, -1 if the roots already do."""
    limit = min(a.radius, b.radius)
    for n in range(limit + 1):
        if not balls_isomorphic(a.restrict(n), b.restrict(n)):
            return n - 1
    return limit


def _marked_pair(spec_a: GroupSpec, spec_b: GroupSpec, radius: int, cap: int, workers: int):
    ra, rb = make_realization(spec_a), make_realization(spec_b)
    if ra.generator_names != rb.generator_names:
        raise AlphabetMismatchError(
            f"{spec_a.render()} is marked by {','.join(ra.generator_names)}, "
            f"{spec_b.render()} by {','.join(rb.generator_names)}"
        )
    return extract_marked_ball(ra, radius, cap, workers), extract_marked_ball(rb, radius, cap, workers)


def convergence_radius(
    spec_a: GroupSpec,
    spec_b: GroupSpec,
    max_radius: int,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> int:
    if max_radius < 0:
        raise SpecValueError(f"max_radius must be >= 0, got {max_radius}")
    a, b = _marked_pair(spec_a, spec_b, max_radius, cap, workers)
    radius = agreement_radius(a, b)
    logger.info(f"{spec_a.render()} ~ {spec_b.render()}: balls agree up to radius {radius}")
    return radius


class LimitGrowthRow(BaseModel):
    i: int
    group: str
    conv_radius: int
    gamma_i_m: int
    gamma_lim_m: int
    upper_i_m: Decimal
    flagged: bool  # balls of radius m differ, so the counts may too
    common_prefix: Optional[int] = None  # shared omega symbols, Grigorchuk rows only


def limit_growth_experiment(
    limit: GroupSpec,
    sequence: Sequence[GroupSpec],
    m: int,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    precision: int = 40,
) -> List[LimitGrowthRow]:
    """Per member: agreement radius with the limit (capped at m) and gamma(m) on both sides."""
    if m < 1:
        raise SpecValueError(f"m must be >= 1, got {m}")

    limit_ball = extract_marked_ball(make_realization(limit), m, cap, workers)
    gamma_limit = sum(1 for d in limit_ball.distances if d <= m)

    rows = []
    for i, spec in enumerate(sequence, start=1):
        r = make_realization(spec)
        if r.generator_names != limit_ball.generator_names:
            raise AlphabetMismatchError(f"{spec.render()} is not marked like {limit.render()}")
        ball = extract_marked_ball(r, m, cap, workers)
        conv = agreement_radius(ball, limit_ball)

        spheres = [0] * (m + 1)
        for d in ball.distances:
            spheres[d] += 1
        table = GrowthTable.from_spheres(spheres, label=r.name)

        if conv >= m and table.gamma[m] != gamma_limit:
            raise AssertionFailure(f"{spec.render()} has isomorphic radius {m} balls but gamma differs")
        row = LimitGrowthRow(
            i=i,
            group=spec.render(),
            conv_radius=conv,
            gamma_i_m=table.gamma[m],
            gamma_lim_m=gamma_limit,
            upper_i_m=omega_bounds(table, precision).upper_at(m),
            flagged=conv < m,
            common_prefix=_omega_agreement(limit, spec),
        )
        if row.flagged:
            logger.warning(f"⚠️  Row {i} ({row.group}): balls agree only up to radius {conv} < {m}")
        rows.append(row)
    return rows


def _omega_agreement(a: GroupSpec, b: GroupSpec) -> Optional[int]:
    if a.kind != "grigorchuk" or b.kind != "grigorchuk":
        return None
    return OmegaSequence(a.prefix or "", a.period).common_prefix_length(OmegaSequence(b.prefix or "", b.period))


def grigorchuk_prefix_sequence(period: str = "012", count: int = 4, filler: Optional[str] = None) -> List[GroupSpec]:
    """
    omega_i = first i*len(period) symbols of period^inf, then filler forever.
    The default filler differs from period[0], so omega_i shares exactly
    i*len(period) symbols with the limit.
    """
    if filler is None:
        filler = next(s for s in "012" if s != period[0])
    return [GroupSpec(kind="grigorchuk", prefix=period * i, period=filler) for i in range(1, count + 1)]

"""
Stabilization of H_{v,w} = < v^-l w v^l : l in Z >

Window L is the subgroup generated by the conjugates with |l| <= L. It
stabilizes at L when both w^(v^(L+1)) and w^(v^-(L+1)) already lie in it;
shift invariance then carries every later conjugate along.

Exact mode: lamplighter with a lamp-only w. Conjugates are shifted lamp
vectors, so membership is linear algebra over Z/m.
Heuristic mode: breadth-first closure of the window inside a budget; only
"stabilized" is ever proven there.
"""
import logging
from typing import Dict, List, Literal, Optional

import sympy
from pydantic import BaseModel
from sympy.matrices.normalforms import hermite_normal_form

from core_groups.base import Element, GeneratorWord, GroupRealization
from core_groups.wreath import LamplighterRealization, LampState
from growth_engine.ball import enumerate_ball
from shared.errors import BallCapExceeded, SpecValueError

logger = logging.getLogger("StabilizationTracker")

Status = Literal["stabilized", "not-stabilized", "exact-infinite"]


class StabilizationReport(BaseModel):
    v: str
    w: str
    L_tested: int
    status: Status
    stabilized_at: Optional[int] = None
    mode: Literal["exact", "heuristic"]
    budget_exhausted: bool = False

    def summary(self) -> str:
        if self.status == "stabilized":
            return f"stabilized at L={self.stabilized_at}"
        if self.status == "exact-infinite":
            return "exact-infinite"
        suffix = " (budget exhausted)" if self.budget_exhausted else ""
        return f"no stabilization up to L={self.L_tested}{suffix}"


# ── exact mode: spans of lamp vectors over Z/m ───────────────────────────
def in_span_mod(vectors: List[Dict[int, int]], target: Dict[int, int], m: int) -> bool:
    """Is target a Z/m-combination of vectors? (all maps position -> value)

    Over Z this asks whether target lies in the lattice spanned by the
    vectors together with m times the unit vectors.
    """
    positions = sorted({p for vec in vectors for p in vec} | set(target))
    if not positions:
        return True
    row = {p: i for i, p in enumerate(positions)}
    n = len(positions)

    columns = []
    for vec in vectors:
        col = [0] * n
        for p, val in vec.items():
            col[row[p]] = val % m
        columns.append(col)
    columns.extend([m if i == j else 0 for i in range(n)] for j in range(n))

    generators = sympy.Matrix(columns).T
    basis = hermite_normal_form(generators)
    b = sympy.Matrix([target.get(p, 0) % m for p in positions])
    # the lattice contains m * Z^n, so the basis is square and invertible
    solution = basis.LUsolve(b)
    return all(entry.is_integer for entry in solution)


def _exact_conjugate(f: Dict[int, int], k: int, l: int) -> Dict[int, int]:
    # v^-l (f, 0) v^l = (shift_{-lk} f, 0)
    return {p - l * k: val for p, val in f.items()}


def _exact_stabilization(r: LamplighterRealization, v: Element, w: Element, L_max: int):
    k = v.payload.shift
    f = w.payload.as_dict()
    for L in range(L_max + 1):
        window = [_exact_conjugate(f, k, l) for l in range(-L, L + 1)]
        if all(
            in_span_mod(window, _exact_conjugate(f, k, l), r.modulus)
            for l in (L + 1, -(L + 1))
        ):
            return "stabilized", L
    if k != 0 and f:
        # the next conjugate reaches a position no window vector touches
        return "exact-infinite", None
    return "not-stabilized", None


# ── heuristic mode: closure of the window in the ambient group ───────────
class WindowSubgroup(GroupRealization):
    """Subgroup generated by given elements, sharing the ambient arithmetic."""

    def __init__(self, ambient: GroupRealization, elements: List[Element]):
        self.ambient = ambient
        self.kind = ambient.kind
        self.exact_keys = ambient.exact_keys
        names = [f"c{i}" for i in range(len(elements))]
        super().__init__(ambient.name, names, [x.payload for x in elements])

    def _identity_payload(self):
        return self.ambient.identity.payload

    def _mul(self, p, q):
        return self.ambient._mul(p, q)

    def _inv(self, p):
        return self.ambient._inv(p)

    def _key(self, p) -> bytes:
        return self.ambient._key(p)

    def _eq(self, p, q) -> bool:
        return self.ambient._eq(p, q)

    def sort_token(self, x: Element):
        return self.ambient.sort_token(x)


def conjugate_power(r: GroupRealization, v: Element, w: Element, l: int) -> Element:
    """v^-l w v^l"""
    vl = r.power(v, l)
    return r.multiply(r.multiply(r.invert(vl), w), vl)


def _heuristic_stabilization(r: GroupRealization, v: Element, w: Element, L_max: int, radius: int, budget: int):
    exhausted = False
    for L in range(L_max + 1):
        window = [conjugate_power(r, v, w, l) for l in range(-L, L + 1)]
        try:
            closure = enumerate_ball(WindowSubgroup(r, window), radius, cap=budget)
        except BallCapExceeded as e:
            closure = e.partial
            exhausted = True
        targets = [conjugate_power(r, v, w, l) for l in (L + 1, -(L + 1))]
        if all(closure.find(x) is not None for x in targets):
            return "stabilized", L, exhausted
    return "not-stabilized", None, exhausted


def hvw_stabilization(
    r: GroupRealization,
    v: GeneratorWord,
    w: GeneratorWord,
    L_max: int,
    mode: Literal["auto", "heuristic"] = "auto",
    radius: int = 6,
    budget: int = 200_000,
) -> StabilizationReport:
    if L_max < 1:
        raise SpecValueError(f"L_max must be >= 1, got {L_max}")

    names = r.generator_names
    ve, we = r.evaluate_word(v), r.evaluate_word(w)
    exact = mode == "auto" and isinstance(r, LamplighterRealization) and isinstance(we.payload, LampState) and we.payload.is_lamp_only

    exhausted = False
    if exact:
        status, at = _exact_stabilization(r, ve, we, L_max)
    else:
        status, at, exhausted = _heuristic_stabilization(r, ve, we, L_max, radius, budget)

    report = StabilizationReport(
        v=v.render(names),
        w=w.render(names),
        L_tested=L_max,
        status=status,
        stabilized_at=at,
        mode="exact" if exact else "heuristic",
        budget_exhausted=exhausted,
    )
    logger.info(f"H_(v,w) for v={report.v}, w={report.w} on {r.name}: {report.summary()} [{report.mode}]")
    return report

"""
Lamplighter group Z/m wr Z

Elements are pairs (f, k): f a finitely supported map Z -> Z/m (the lamps),
k the cursor shift. Multiplication convention:

    (f, k)(g, l) = (f + shift_k(g), k + l),   shift_k(g)(x) = g(x - k)

so shift_k moves a support by +k. Generators: a = lamp at the origin, t = shift.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from core_groups.base import Element, GroupRealization
from shared.errors import SpecValueError


@dataclass(frozen=True)
class LampState:
    lamps: Tuple[Tuple[int, int], ...]  # sorted (position, value), value in 1..m-1
    shift: int

    def as_dict(self) -> Dict[int, int]:
        return dict(self.lamps)

    @property
    def is_lamp_only(self) -> bool:
        return self.shift == 0


def shift_lamps(lamps: Dict[int, int], k: int) -> Dict[int, int]:
    return {pos + k: val for pos, val in lamps.items()}


def _normalize(lamps: Dict[int, int], m: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((pos, val % m) for pos, val in lamps.items() if val % m))


class LamplighterRealization(GroupRealization):
    kind = "lamplighter"

    def __init__(self, name: str, modulus: int):
        if modulus < 2:
            raise SpecValueError(f"lamplighter modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        a = LampState(((0, 1),), 0)
        t = LampState((), 1)
        super().__init__(name, ("a", "t"), (a, t))

    def _identity_payload(self) -> LampState:
        return LampState((), 0)

    def _mul(self, p: LampState, q: LampState) -> LampState:
        if not q.lamps:
            return LampState(p.lamps, p.shift + q.shift)
        lamps = p.as_dict()
        for pos, val in q.lamps:
            target = pos + p.shift
            lamps[target] = lamps.get(target, 0) + val
        return LampState(_normalize(lamps, self.modulus), p.shift + q.shift)

    def _inv(self, p: LampState) -> LampState:
        # (f, k)^-1 = (-shift_{-k}(f), -k)
        lamps = {pos - p.shift: -val for pos, val in p.lamps}
        return LampState(_normalize(lamps, self.modulus), -p.shift)

    def _key(self, p: LampState) -> bytes:
        support = ",".join(f"{pos}:{val}" for pos, val in p.lamps)
        return f"W|{p.shift}|{support}".encode()

    def make(self, lamps: Dict[int, int], shift: int = 0):
        """Build an element directly from lamps and shift (values reduced mod m)."""
        return Element(self.name, LampState(_normalize(lamps, self.modulus), shift))

"""
Weight sets W_i(X) in the free group on X, their depth, and the f(n) bound

    W_1 = X u X^-1
    W_i = { [u^+-1, v^+-1] : u in W_i1, v in W_i2, i1 + i2 = i }

Members are deduplicated by reduced word; freely trivial commutators are
dropped and counted.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from freecalc.words import FreeWord, commutator
from shared.config import DEFAULT_CAP
from shared.errors import CombinatorialCapExceeded, SpecValueError

logger = logging.getLogger("WeightSets")


@dataclass
class WeightSets:
    rank: int
    sets: Dict[int, List[FreeWord]] = field(default_factory=dict)
    dropped_trivial: Dict[int, int] = field(default_factory=dict)
    duplicates: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> List[FreeWord]:
        return self.sets[i]

    @property
    def weight(self) -> int:
        return max(self.sets) if self.sets else 0


def weight_sets(k: int, n: int, cap: int = DEFAULT_CAP) -> WeightSets:
    if k < 1 or n < 1:
        raise SpecValueError(f"weight sets need k >= 1 and n >= 1, got k={k}, n={n}")

    result = WeightSets(rank=k)
    first = []
    for symbol in range(k):
        first.append(FreeWord.letter(symbol, 1))
        first.append(FreeWord.letter(symbol, -1))
    result.sets[1] = first
    result.dropped_trivial[1] = 0
    result.duplicates[1] = 0

    for i in range(2, n + 1):
        candidates = 4 * sum(len(result.sets[i1]) * len(result.sets[i - i1]) for i1 in range(1, i))
        if candidates > cap:
            raise CombinatorialCapExceeded(
                f"W_{i} needs {candidates} commutators, over the cap of {cap}"
            )

        members: List[FreeWord] = []
        seen = set()
        dropped = duplicates = 0
        for i1 in range(1, i):
            for u in result.sets[i1]:
                for v in result.sets[i - i1]:
                    for su in (1, -1):
                        for sv in (1, -1):
                            c = commutator(u ** su, v ** sv)
                            if not c.letters:
                                dropped += 1
                                continue
                            if c.letters in seen:
                                duplicates += 1
                                continue
                            seen.add(c.letters)
                            members.append(c)

        result.sets[i] = members
        result.dropped_trivial[i] = dropped
        result.duplicates[i] = duplicates
        if dropped:
            logger.info(f"W_{i}: dropped {dropped} freely trivial commutators")
        logger.debug(f"W_{i}: {len(members)} members from {candidates} candidates")

    return result


def f_bound(n: int) -> int:
    """f(1) = 1, f(n+1) = 2 f(n) + 2, i.e. 3 * 2^(n-1) - 2"""
    if n < 1:
        raise SpecValueError(f"f is defined for n >= 1, got {n}")
    return 3 * (1 << (n - 1)) - 2


def depth_of_set(words: Sequence[FreeWord]) -> int:
    if not words:
        raise SpecValueError("depth of an empty set is undefined")
    return max(w.norm() for w in words)


# ── reports ──────────────────────────────────────────────────────────────
class DepthRow(BaseModel):
    i: int
    set_size: int
    depth: Optional[int]  # None when W_i is empty
    f_i: int
    equal: bool
    dropped_trivial: int


class FInequalityRow(BaseModel):
    i: int
    j: int
    lhs: int  # 2(f(i) + f(j))
    rhs: int  # f(i + j)
    holds: bool
    tight: bool


class DepthReport(BaseModel):
    rank: int
    weight: int
    rows: List[DepthRow]
    depth_bound_holds: bool
    inequality_holds: bool
    tight_pairs: List[Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.depth_bound_holds and self.inequality_holds


def f_inequality_table(bound: int = 40) -> List[FInequalityRow]:
    """2(f(i)+f(j)) <= f(i+j) for 1 <= i <= j, i + j <= bound; tight cases flagged."""
    rows = []
    for i in range(1, bound):
        for j in range(i, bound - i + 1):
            lhs = 2 * (f_bound(i) + f_bound(j))
            rhs = f_bound(i + j)
            rows.append(FInequalityRow(i=i, j=j, lhs=lhs, rhs=rhs, holds=lhs <= rhs, tight=lhs == rhs))
    return rows


def verify_depth_bound(k: int, n: int, cap: int = DEFAULT_CAP) -> DepthReport:
    sets = weight_sets(k, n, cap)

    rows = []
    depth_ok = True
    for i in range(1, n + 1):
        members = sets[i]
        f_i = f_bound(i)
        depth = depth_of_set(members) if members else None
        if depth is not None and depth > f_i:
            depth_ok = False
            logger.warning(f"⚠️  depth(W_{i}) = {depth} exceeds f({i}) = {f_i}")
        rows.append(
            DepthRow(
                i=i,
                set_size=len(members),
                depth=depth,
                f_i=f_i,
                equal=depth == f_i,
                dropped_trivial=sets.dropped_trivial[i],
            )
        )

    table = f_inequality_table(2 * n)
    inequality_ok = all(row.holds for row in table)
    tight = [(row.i, row.j) for row in table if row.tight]

    logger.info(
        f"Depth bound k={k}, n={n}: {'holds' if depth_ok else 'FAILS'}; "
        f"f inequality {'holds' if inequality_ok else 'FAILS'} ({len(tight)} tight pairs)"
    )
    return DepthReport(
        rank=k,
        weight=n,
        rows=rows,
        depth_bound_holds=depth_ok,
        inequality_holds=inequality_ok,
        tight_pairs=tight,
    )

"""
Commutator towers, shift expansion and letter collection in free groups

Symbols 0 and 1 stand for a and b in the free group on {a, b}.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from freecalc.words import FreeWord, commutator, free_reduce, product
from shared.config import DEFAULT_CAP
from shared.errors import AssertionFailure, CombinatorialCapExceeded, SpecValueError

logger = logging.getLogger("FreeCollection")

A, B = 0, 1
AB_NAMES = {A: "a", B: "b"}


# ── commutator towers ────────────────────────────────────────────────────
@dataclass
class CommutatorTower:
    levels: List[List[FreeWord]] = field(default_factory=list)
    dropped_trivial: List[int] = field(default_factory=list)

    def level(self, i: int) -> List[FreeWord]:
        """1-based"""
        return self.levels[i - 1]


def commutator_tower(n: int, cap: int = DEFAULT_CAP) -> CommutatorTower:
    """(a, b^+-1)_1 = {[a,b], [a,b^-1]}, (a, b^+-1)_{i+1} = {[c,b], [c,b^-1] : c in level i}"""
    if n < 1:
        raise SpecValueError(f"tower height must be >= 1, got {n}")
    if (1 << n) > cap:
        raise CombinatorialCapExceeded(f"level {n} holds 2^{n} commutators, over the cap of {cap}")

    a, b = FreeWord.letter(A), FreeWord.letter(B)
    tower = CommutatorTower()
    previous = [a]
    for i in range(1, n + 1):
        level, dropped = [], 0
        for c in previous:
            for sign in (1, -1):
                x = commutator(c, b ** sign)
                if x.is_trivial():
                    dropped += 1
                    continue
                level.append(x)
        if dropped:
            logger.info(f"Tower level {i}: dropped {dropped} freely trivial commutators")
        tower.levels.append(level)
        tower.dropped_trivial.append(dropped)
        previous = level
    return tower


# ── shift expansion ──────────────────────────────────────────────────────
@dataclass(frozen=True)
class ShiftWord:
    """Word in a_l = a^(b^l); symbol of each letter is its shift index l."""

    word: FreeWord
    window: int

    def indices(self) -> Tuple[int, ...]:
        return tuple(l for l, _ in self.word.letters)

    def __len__(self) -> int:
        return len(self.word)

    def render(self) -> str:
        if not self.word.letters:
            return "1"
        return " ".join(f"a_{l}" if s > 0 else f"a_{l}^-1" for l, s in self.word.letters)


def shift_expand(c: FreeWord, window: int) -> ShiftWord:
    """Rewrite c in the normal closure of a as a word in a_l, |l| <= window."""
    c = free_reduce(c)
    if c.exponent_sum(B) != 0:
        raise SpecValueError(f"b has exponent sum {c.exponent_sum(B)}; word is not in the normal closure of a")

    letters = []
    prefix = 0
    for symbol, sign in c.letters:
        if symbol == B:
            prefix += sign
        elif symbol == A:
            # b^p a b^-p = a_{-p}
            letters.append((-prefix, sign))
        else:
            raise SpecValueError(f"symbol {symbol} is outside the alphabet {{a, b}}")

    shifted = free_reduce(FreeWord(tuple(letters)))
    too_far = [l for l, _ in shifted.letters if abs(l) > window]
    if too_far:
        raise AssertionFailure(f"shift index {max(too_far, key=abs)} is outside the window {window}")
    return ShiftWord(shifted, window)


def substitute_shift(sw: ShiftWord) -> FreeWord:
    """a_l -> b^-l a b^l, reduced"""
    a, b = FreeWord.letter(A), FreeWord.letter(B)
    pieces = []
    for l, sign in sw.word.letters:
        pieces.append(b ** (-l) * a ** sign * b ** l)
    return free_reduce(product(pieces))


# ── letter collection ────────────────────────────────────────────────────
@dataclass(frozen=True)
class CollectionStep:
    a: FreeWord  # the non-target letter
    b: FreeWord  # [a, target^exponent]
    exponent: int  # signed target count to the right of a


@dataclass(frozen=True)
class CollectionResult:
    target: int
    sigma: int
    tail: FreeWord
    trace: Tuple[CollectionStep, ...]

    def reassemble(self) -> FreeWord:
        return FreeWord.letter(self.target) ** self.sigma * self.tail


def collect_letter(w: FreeWord, target: int) -> CollectionResult:
    """Move every target letter to the left with x y = y x [x, y].

    Letters are consumed right to left; the suffix read so far is always
    target^s * (a_i b_i ...), so a letter x in front of it becomes
    target^s * x [x, target^s].
    """
    t = FreeWord.letter(target)
    s = 0
    steps: List[CollectionStep] = []
    for symbol, sign in reversed(w.letters):
        if symbol == target:
            s += sign
            continue
        x = FreeWord.letter(symbol, sign)
        steps.append(CollectionStep(a=x, b=commutator(x, t ** s), exponent=s))

    steps.reverse()
    tail = product([piece for step in steps for piece in (step.a, step.b)])
    return CollectionResult(target=target, sigma=s, tail=tail, trace=tuple(steps))

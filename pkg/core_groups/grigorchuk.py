"""
Grigorchuk family G_omega acting on the rooted binary tree

omega is an eventually periodic sequence over {0,1,2}, stored as a finite
prefix plus a period. Generators a, b, c, d (d = bc kept so the marked
alphabet is the same for every omega):

    a            swaps the first letter
    x in {b,c,d} = (u_x(omega_1), x_{sigma omega})

with u_x(s) in {a, 1} read from SECTION_IS_A. Elements are reduced words in
which a's alternate with single letters of {b,c,d}; they act on the right,
so the word x1 x2 ... applies x1 first.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from core_groups.base import Element, GroupRealization
from shared.errors import SpecValueError

PORTRAIT_DEPTH = 6

# symbol -> {letter: True if the first-level section at vertex 0 is a}
SECTION_IS_A: Dict[str, Dict[str, bool]] = {
    "0": {"b": True, "c": True, "d": False},
    "1": {"b": True, "c": False, "d": True},
    "2": {"b": False, "c": True, "d": True},
}

# a letter of {b,c,d} is trivial in G_omega iff omega is constantly this symbol
KILLING_SYMBOL = {"b": "2", "c": "1", "d": "0"}

_KLEIN = {
    ("b", "c"): "d", ("c", "b"): "d",
    ("b", "d"): "c", ("d", "b"): "c",
    ("c", "d"): "b", ("d", "c"): "b",
}


@dataclass(frozen=True)
class OmegaSequence:
    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise SpecValueError("omega needs a non-empty periodic part")
        bad = set(self.prefix + self.period) - set("012")
        if bad:
            raise SpecValueError(f"omega symbols must lie in {{0,1,2}}, got {''.join(sorted(bad))}")

    @property
    def head(self) -> str:
        return self.prefix[0] if self.prefix else self.period[0]

    def shift(self) -> "OmegaSequence":
        if self.prefix:
            return OmegaSequence(self.prefix[1:], self.period)
        return OmegaSequence("", self.period[1:] + self.period[:1])

    def symbol(self, n: int) -> str:
        """0-based n-th symbol"""
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def common_prefix_length(self, other: "OmegaSequence", horizon: int = 1000) -> int:
        n = 0
        while n < horizon and self.symbol(n) == other.symbol(n):
            n += 1
        return n

    def render(self) -> str:
        return f"{self.prefix}({self.period})*"


def reduce_word(word: str) -> str:
    stack: List[str] = []
    for ch in word:
        if ch == "a":
            if stack and stack[-1] == "a":
                stack.pop()
            else:
                stack.append(ch)
        elif ch in "bcd":
            if stack and stack[-1] != "a":
                combined = _KLEIN.get((stack.pop(), ch), "")
                if combined:
                    stack.append(combined)
            else:
                stack.append(ch)
        else:
            raise SpecValueError(f"letter '{ch}' is not a Grigorchuk generator")
    return "".join(stack)


def grigorchuk_sections(word: str, omega: OmegaSequence) -> Tuple[str, str]:
    """First-level sections (at vertex 0 and vertex 1) of a reduced word with an
    even number of a's; both live in G_{sigma omega} and come back reduced."""
    head = omega.head
    sections = []
    for start in (0, 1):
        vertex = start
        parts = []
        for ch in word:
            if ch == "a":
                vertex ^= 1
            elif vertex == 0:
                if SECTION_IS_A[head][ch]:
                    parts.append("a")
            else:
                parts.append(ch)
        sections.append(reduce_word("".join(parts)))
    return sections[0], sections[1]


def _letter_is_trivial(letter: str, omega: OmegaSequence) -> bool:
    if letter == "a":
        return False
    return set(omega.prefix + omega.period) == {KILLING_SYMBOL[letter]}


@lru_cache(maxsize=1 << 18)
def is_trivial(word: str, omega: OmegaSequence) -> bool:
    """Exact word problem by contraction: each recursive call halves the length."""
    w = reduce_word(word)
    if not w:
        return True
    if len(w) == 1:
        return _letter_is_trivial(w, omega)
    if w.count("a") % 2:
        return False
    left, right = grigorchuk_sections(w, omega)
    nxt = omega.shift()
    return is_trivial(left, nxt) and is_trivial(right, nxt)


def section_length_bound(n: int) -> int:
    return math.ceil((n + 1) / 2)


def _act_on_vertex(letter: str, bits: List[int], omega: OmegaSequence) -> None:
    if letter == "a":
        bits[0] ^= 1
        return
    seq = omega
    for i in range(len(bits)):
        if bits[i] == 0:
            if SECTION_IS_A[seq.head][letter] and i + 1 < len(bits):
                bits[i + 1] ^= 1
            return
        seq = seq.shift()


def level_permutation(letter: str, omega: OmegaSequence, depth: int = PORTRAIT_DEPTH) -> Tuple[int, ...]:
    """Action of one generator on the 2^depth vertices of level `depth`
    (vertex index = sum of bit_i * 2^i, bit_0 the letter nearest the root)."""
    images = []
    for v in range(1 << depth):
        bits = [(v >> i) & 1 for i in range(depth)]
        _act_on_vertex(letter, bits, omega)
        images.append(sum(bit << i for i, bit in enumerate(bits)))
    return tuple(images)


class GrigorchukRealization(GroupRealization):
    kind = "grigorchuk"
    exact_keys = False

    def __init__(self, name: str, omega: OmegaSequence, portrait_depth: int = PORTRAIT_DEPTH):
        self.omega = omega
        self.portrait_depth = portrait_depth
        self._perms = {ch: level_permutation(ch, omega, portrait_depth) for ch in "abcd"}
        super().__init__(name, ("a", "b", "c", "d"), ("a", "b", "c", "d"))

    def _identity_payload(self) -> str:
        return ""

    def _mul(self, p: str, q: str) -> str:
        return reduce_word(p + q)

    def _inv(self, p: str) -> str:
        # every generator is an involution
        return p[::-1]

    def _eq(self, p: str, q: str) -> bool:
        if p == q:
            return True
        return is_trivial(p + q[::-1], self.omega)

    def _key(self, p: str) -> bytes:
        """Portrait on level PORTRAIT_DEPTH; equal elements share it, unequal ones may too."""
        image = list(range(1 << self.portrait_depth))
        for ch in p:
            perm = self._perms[ch]
            image = [perm[v] for v in image]
        return b"G|" + bytes(image) if self.portrait_depth <= 8 else b"G|" + ",".join(map(str, image)).encode()

    def sort_token(self, x: Element) -> str:
        return x.payload

    def order_is_power_of_two(self, x: Element, max_doublings: int = 16) -> bool:
        """True if x^(2^k) is trivial for some k <= max_doublings."""
        self._own(x)
        current = x.payload
        for _ in range(max_doublings + 1):
            if is_trivial(current, self.omega):
                return True
            current = reduce_word(current + current)
        return False

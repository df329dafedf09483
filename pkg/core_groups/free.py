"""
Free group of rank k realized as reduced words
"""
from typing import Sequence

from core_groups.base import GroupRealization
from freecalc.words import FreeWord
from shared.errors import SpecValueError


class FreeRealization(GroupRealization):
    kind = "free"

    def __init__(self, name: str, rank: int, names: Sequence[str]):
        if rank < 1:
            raise SpecValueError(f"free group rank must be >= 1, got {rank}")
        self.rank = rank
        # fixed-width code per letter, so keys are injective and compare like the words
        width = 1 if 2 * rank <= 256 else 2
        self._codes = {
            (s, e): (2 * s + (e < 0)).to_bytes(width, "big") for s in range(rank) for e in (1, -1)
        }
        super().__init__(name, names, [FreeWord.letter(i) for i in range(rank)])

    def _identity_payload(self) -> FreeWord:
        return FreeWord()

    def _mul(self, p: FreeWord, q: FreeWord) -> FreeWord:
        # both factors are reduced, so cancellation only happens at the seam
        a, b = p.letters, q.letters
        n, cut = min(len(a), len(b)), 0
        while cut < n and a[-1 - cut][0] == b[cut][0] and a[-1 - cut][1] == -b[cut][1]:
            cut += 1
        if not cut:
            return FreeWord.trusted(a + b)
        return FreeWord.trusted(a[:len(a) - cut] + b[cut:])

    def _inv(self, p: FreeWord) -> FreeWord:
        return p.inverse()

    def _key(self, p: FreeWord) -> bytes:
        return b"".join(map(self._codes.__getitem__, p.letters))

"""
Words over an abstract alphabet and the free-group operations on them.

A FreeWord is a spelling: equality (==) is letter-for-letter, lengths and
letter counts are taken on the spelling as written. Free-group equality is
`same_element`, which compares reduced forms.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

Letter = Tuple[int, int]  # (symbol id, sign +1/-1)


@dataclass(frozen=True)
class FreeWord:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for symbol, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign} for symbol {symbol}")

    @classmethod
    def letter(cls, symbol: int, sign: int = 1) -> "FreeWord":
        return cls(((symbol, sign),))

    @classmethod
    def trusted(cls, letters: Tuple[Letter, ...]) -> "FreeWord":
        """Wrap letters already known to carry valid signs, skipping validation."""
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        # concatenation, no cancellation
        return FreeWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** -n
        return FreeWord(self.letters * n)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((symbol, -sign) for symbol, sign in reversed(self.letters)))

    def reduced(self) -> "FreeWord":
        return free_reduce(self)

    def norm(self) -> int:
        """||w||: length of the reduced form"""
        return len(free_reduce(self))

    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(self.letters, self.letters[1:])
        )

    def is_trivial(self) -> bool:
        return not free_reduce(self).letters

    def same_element(self, other: "FreeWord") -> bool:
        return free_reduce(self) == free_reduce(other)

    def exponent_sum(self, symbol: int) -> int:
        return sum(sign for s, sign in self.letters if s == symbol)

    def symbols(self) -> Tuple[int, ...]:
        return tuple(sorted({s for s, _ in self.letters}))

    def render(self, names: Optional[Dict[int, str]] = None) -> str:
        if not self.letters:
            return "1"
        parts = []
        for symbol, sign in self.letters:
            name = names[symbol] if names and symbol in names else f"x{symbol}"
            parts.append(name if sign > 0 else f"{name}^-1")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FreeWord({self.render()})"


def free_reduce(word: FreeWord) -> FreeWord:
    """Cancel adjacent x x^-1 pairs until none remain (single stack pass)."""
    stack = []
    for symbol, sign in word.letters:
        if stack and stack[-1][0] == symbol and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((symbol, sign))
    if len(stack) == len(word.letters):
        return word
    return FreeWord(tuple(stack))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u^-1 v^-1 u v, reduced"""
    return free_reduce(u.inverse() * v.inverse() * u * v)


def conjugate(u: FreeWord, v: FreeWord) -> FreeWord:
    """u^v = v^-1 u v, reduced"""
    return free_reduce(v.inverse() * u * v)


def lambda_count(word: FreeWord, symbol: int) -> int:
    """Number of appearances of symbol^(+-1) in the spelling (not in the reduced form)."""
    return sum(1 for s, _ in word.letters if s == symbol)


def canonical_form(v: FreeWord, w: FreeWord) -> FreeWord:
    """The spelling v^-1 w v, kept letter-for-letter."""
    return v.inverse() * w * v


def product(words: Sequence[FreeWord]) -> FreeWord:
    letters: Tuple[Letter, ...] = ()
    for w in words:
        letters += w.letters
    return FreeWord(letters)

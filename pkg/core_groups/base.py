"""
Concrete finitely generated groups: generator words, elements, realizations
Every realization does exact arithmetic; floats never enter element computation.
"""
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Hashable, List, Sequence, Tuple

from shared.errors import InvalidWordError, MixedRealizationError, SpecValueError

Letter = Tuple[int, int]  # (generator index, sign)


@dataclass(frozen=True)
class GeneratorWord:
    letters: Tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + other.letters)

    def __mul__(self, n: int) -> "GeneratorWord":
        return GeneratorWord(self.letters * n)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def is_freely_reduced(self) -> bool:
        return all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(self.letters, self.letters[1:]))

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "GeneratorWord":
        """Lowercase generator name = generator, uppercase = its inverse; "1" or "" = identity.

        Multi-character names are matched greedily, so "x0X1" works for names x0, x1.
        """
        text = text.strip()
        if text in ("", "1", "e"):
            return cls()
        lookup = {}
        for index, name in enumerate(names):
            lookup[name] = (index, 1)
            lookup[name.upper()] = (index, -1)
        pattern = re.compile("|".join(re.escape(n) for n in sorted(lookup, key=len, reverse=True)))
        letters = []
        pos = 0
        compact = re.sub(r"[\s\.\*]", "", text)
        while pos < len(compact):
            match = pattern.match(compact, pos)
            if not match:
                raise InvalidWordError(f"unknown generator at position {pos} in word '{text}' (generators: {', '.join(names)})")
            letters.append(lookup[match.group(0)])
            pos = match.end()
        return cls(tuple(letters))

    def render(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return "".join(names[i] if s > 0 else names[i].upper() for i, s in self.letters)


@dataclass(frozen=True)
class Element:
    owner: str
    payload: Any


class GroupRealization(ABC):
    """A group given by concrete generators; elements are exact normal-form payloads."""

    kind: str = "abstract"
    # canonical keys are injective on elements; False means callers resolve collisions with equal()
    exact_keys: bool = True
    # the GroupSpec this realization was built from, set by make_realization
    spec = None

    def __init__(self, name: str, generator_names: Sequence[str], generator_payloads: Sequence[Any]):
        if not generator_payloads:
            raise SpecValueError("a realization needs at least one generator")
        if len(generator_names) != len(generator_payloads):
            raise SpecValueError("generator names and generators differ in number")
        self.name = name
        self.generator_names: Tuple[str, ...] = tuple(generator_names)
        self.identity = Element(name, self._identity_payload())
        self.generators: Tuple[Element, ...] = tuple(Element(name, p) for p in generator_payloads)
        self.generator_inverses: Tuple[Element, ...] = tuple(
            Element(name, self._inv(p)) for p in generator_payloads
        )

    # ── payload arithmetic, supplied by each kind ────────────────────────
    @abstractmethod
    def _identity_payload(self) -> Any: ...

    @abstractmethod
    def _mul(self, p: Any, q: Any) -> Any: ...

    @abstractmethod
    def _inv(self, p: Any) -> Any: ...

    @abstractmethod
    def _key(self, p: Any) -> bytes: ...

    def _eq(self, p: Any, q: Any) -> bool:
        return p == q

    # ── public operations ────────────────────────────────────────────────
    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def _own(self, *elements: Element) -> None:
        for x in elements:
            if x.owner != self.name:
                raise MixedRealizationError(f"element of '{x.owner}' used with realization '{self.name}'")

    def multiply(self, x: Element, y: Element) -> Element:
        self._own(x, y)
        return Element(self.name, self._mul(x.payload, y.payload))

    def invert(self, x: Element) -> Element:
        self._own(x)
        return Element(self.name, self._inv(x.payload))

    def equal(self, x: Element, y: Element) -> bool:
        self._own(x, y)
        return self._eq(x.payload, y.payload)

    def is_identity(self, x: Element) -> bool:
        return self.equal(x, self.identity)

    def canonical_key(self, x: Element) -> bytes:
        self._own(x)
        return self._key(x.payload)

    def letter(self, index: int, sign: int) -> Element:
        if not 0 <= index < self.generator_count:
            raise InvalidWordError(f"generator index {index} out of range for {self.generator_count} generators")
        if sign == 1:
            return self.generators[index]
        if sign == -1:
            return self.generator_inverses[index]
        raise InvalidWordError(f"letter sign must be +1 or -1, got {sign}")

    def evaluate_word(self, word: GeneratorWord) -> Element:
        result = self.identity
        for index, sign in word.letters:
            result = self.multiply(result, self.letter(index, sign))
        return result

    def power(self, x: Element, n: int) -> Element:
        if n < 0:
            x, n = self.invert(x), -n
        result, base = self.identity, x
        while n:
            if n & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            n >>= 1
        return result

    def alphabet(self) -> List[Tuple[Letter, Element]]:
        """X u X^-1 in the fixed order g0, g0^-1, g1, g1^-1, ..."""
        letters = []
        for index in range(self.generator_count):
            letters.append(((index, 1), self.generators[index]))
            letters.append(((index, -1), self.generator_inverses[index]))
        return letters

    def parse_word(self, text: str) -> GeneratorWord:
        return GeneratorWord.parse(text, self.generator_names)

    def sort_token(self, x: Element) -> Hashable:
        """Deterministic tie-break between elements sharing a coarse key."""
        return repr(x.payload)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} on {', '.join(self.generator_names)}>"

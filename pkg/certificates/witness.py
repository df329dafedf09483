"""
Free-semigroup witnesses for exponential growth

For words v, w put t(alpha) = w^a1 v w^a2 v ... w^ap v over bit strings alpha.
If the 2^1 + ... + 2^p elements t(alpha), p <= p_max, are pairwise distinct,
then gamma(n) >= 2^floor(n / cost) for n <= p_max * cost, where
cost = |v| + |w|, and omega >= 2^(1/cost) holds provided the pattern keeps
going for every p ("certified-if-free").
"""
import itertools
import logging
from decimal import Decimal
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from core_groups.base import Element, GeneratorWord, GroupRealization
from freecalc.words import FreeWord, free_reduce
from growth_engine.growth import GrowthTable
from shared.config import DEFAULT_CAP
from shared.errors import BudgetExceededError, SpecValueError
from shared.numeric import integer_root, to_decimal

logger = logging.getLogger("WitnessVerifier")

CERTIFIED_IF_FREE = "certified-if-free"


def word_cost(word: GeneratorWord) -> int:
    return len(free_reduce(FreeWord(word.letters)))


class WitnessCertificate(BaseModel):
    v: str
    w: str
    cost: int
    p_verified: int
    injective: bool
    omega_lower: Optional[Decimal] = None
    gamma_lower_checked: bool = False
    bound_label: str = CERTIFIED_IF_FREE
    collision: Optional[Tuple[str, str]] = None  # colliding alphas as bit strings

    def gamma_lower(self, n: int) -> Optional[int]:
        """2^floor(n/cost), only where the injectivity check covers it."""
        if not self.injective or n < 0 or n > self.p_verified * self.cost:
            return None
        return 1 << (n // self.cost)


def t_alpha(r: GroupRealization, v: GeneratorWord, w: GeneratorWord, alpha: Sequence[int]) -> Element:
    if not alpha:
        raise SpecValueError("alpha needs at least one bit")
    word = GeneratorWord()
    for bit in alpha:
        if bit not in (0, 1):
            raise SpecValueError(f"alpha entries must be 0 or 1, got {bit}")
        word = word + (w + v if bit else v)
    return r.evaluate_word(word)


def _bits(alpha: Tuple[int, ...]) -> str:
    return "".join(map(str, alpha))


def verify_witness(
    r: GroupRealization,
    v: GeneratorWord,
    w: GeneratorWord,
    p_max: int,
    cap: int = DEFAULT_CAP,
    precision: int = 40,
) -> WitnessCertificate:
    if p_max < 1:
        raise SpecValueError(f"p_max must be >= 1, got {p_max}")
    total = (1 << (p_max + 1)) - 2
    if total > cap:
        raise BudgetExceededError(f"p_max={p_max} needs {total} evaluations, over the cap of {cap}")

    names = r.generator_names
    cost = word_cost(v) + word_cost(w)
    step = {0: r.evaluate_word(v), 1: r.evaluate_word(w + v)}

    seen: Dict[bytes, List[Tuple[Element, Tuple[int, ...]]]] = {}
    level: List[Tuple[Tuple[int, ...], Element]] = [((), r.identity)]

    for p in range(1, p_max + 1):
        next_level = []
        for alpha, x in level:
            for bit in (0, 1):
                beta = alpha + (bit,)
                y = r.multiply(x, step[bit])
                key = r.canonical_key(y)
                bucket = seen.setdefault(key, [])
                for other, gamma in bucket:
                    if r.exact_keys or r.equal(other, y):
                        logger.debug(f"Collision t({_bits(gamma)}) = t({_bits(beta)}) for v={v.render(names)}, w={w.render(names)}")
                        return WitnessCertificate(
                            v=v.render(names),
                            w=w.render(names),
                            cost=cost,
                            p_verified=p - 1,
                            injective=False,
                            collision=(_bits(gamma), _bits(beta)),
                        )
                bucket.append((y, beta))
                next_level.append((beta, y))
        level = next_level

    omega_lower = to_decimal(integer_root(2, cost, precision), precision)
    logger.info(f"✅ Witness v={v.render(names)}, w={w.render(names)} injective up to p={p_max}; omega >= {omega_lower}")
    return WitnessCertificate(
        v=v.render(names),
        w=w.render(names),
        cost=cost,
        p_verified=p_max,
        injective=True,
        omega_lower=omega_lower,
    )


def _letter_order(letter: Tuple[int, int]) -> Tuple[int, int]:
    index, sign = letter
    return index, 0 if sign > 0 else 1


def _word_order(word: GeneratorWord) -> List[Tuple[int, int]]:
    return [_letter_order(letter) for letter in word.letters]


def reduced_words(generator_count: int, max_len: int) -> List[GeneratorWord]:
    """Freely reduced nonempty words, shortest first, then lexicographic."""
    letters = sorted(((i, s) for i in range(generator_count) for s in (1, -1)), key=_letter_order)
    words = []
    for length in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            word = GeneratorWord(tuple(combo))
            if word.is_freely_reduced():
                words.append(word)
    return words


def witness_search(
    r: GroupRealization,
    max_word_len: int,
    p_max: int,
    cap: int = DEFAULT_CAP,
    precision: int = 40,
) -> Optional[WitnessCertificate]:
    """First injective (v, w) in order of cost, then v, then w; None if nothing passes."""
    if max_word_len < 1:
        raise SpecValueError(f"max_word_len must be >= 1, got {max_word_len}")

    words = reduced_words(r.generator_count, max_word_len)
    pairs = sorted(
        itertools.product(words, repeat=2),
        key=lambda pair: (len(pair[0]) + len(pair[1]), _word_order(pair[0]), _word_order(pair[1])),
    )

    for tried, (v, w) in enumerate(pairs, start=1):
        certificate = verify_witness(r, v, w, p_max, cap, precision)
        if certificate.injective:
            logger.info(f"Witness search on {r.name}: found after {tried} of {len(pairs)} pairs")
            return certificate
    logger.info(f"Witness search on {r.name}: none of {len(pairs)} pairs is injective up to p={p_max}")
    return None


def check_certificate_against_table(certificate: WitnessCertificate, table: GrowthTable) -> List[int]:
    """Radii where the certified lower bound exceeds the measured gamma (empty when sound)."""
    failures = []
    for n in range(table.radius + 1):
        bound = certificate.gamma_lower(n)
        if bound is not None and bound > table.gamma[n]:
            failures.append(n)
    if failures:
        logger.error(f"❌ Certificate v={certificate.v}, w={certificate.w} exceeds gamma at radii {failures}")
    return failures


class WitnessSearchReport(BaseModel):
    group: str
    max_word_len: int
    p_max: int
    found: bool
    certificate: Optional[WitnessCertificate] = None

import random

from sympy.combinatorics.free_groups import free_group

from freecalc.words import FreeWord, canonical_form, commutator, conjugate, free_reduce, lambda_count

F, sx, sy, sz, sw = free_group("x, y, z, w")
SYMPY_GENS = (sx, sy, sz, sw)


def to_sympy(word: FreeWord):
    element = F.identity
    for symbol, sign in word.letters:
        element = element * SYMPY_GENS[symbol] ** sign
    return element


def random_word(rng: random.Random, length: int, symbols: int = 4) -> FreeWord:
    return FreeWord(tuple((rng.randrange(symbols), rng.choice((1, -1))) for _ in range(length)))


def w(*letters):
    return FreeWord(tuple(letters))


def test_reduce_cancels_inverse_pairs():
    assert free_reduce(w((0, 1), (0, -1))) == FreeWord()
    assert free_reduce(w((0, 1), (1, 1), (1, -1), (0, 1))) == w((0, 1), (0, 1))


def test_reduce_is_idempotent_and_keeps_reduced_words():
    reduced = w((0, 1), (1, -1), (0, 1))
    assert free_reduce(reduced) == reduced
    assert free_reduce(free_reduce(reduced)) == reduced


def test_reduce_matches_sympy_on_random_words():
    rng = random.Random(7)
    for _ in range(500):
        word = random_word(rng, rng.randrange(0, 25))
        reduced = free_reduce(word)
        assert reduced.is_reduced()
        assert to_sympy(reduced) == to_sympy(word)
        # sympy counts letters of its (reduced) normal form
        assert len(to_sympy(word)) == len(reduced)


def test_commutator_examples():
    x, y = FreeWord.letter(0), FreeWord.letter(1)
    assert commutator(x, x) == FreeWord()
    assert commutator(x, y) == w((0, -1), (1, -1), (0, 1), (1, 1))
    assert len(commutator(x, y)) == 4
    assert commutator(y.inverse(), y) == FreeWord()


def test_commutator_and_conjugate_match_sympy():
    rng = random.Random(11)
    for _ in range(200):
        u, v = random_word(rng, rng.randrange(1, 8)), random_word(rng, rng.randrange(1, 8))
        su, sv = to_sympy(u), to_sympy(v)
        assert to_sympy(commutator(u, v)) == su ** -1 * sv ** -1 * su * sv
        assert to_sympy(conjugate(u, v)) == sv ** -1 * su * sv


def test_lambda_count_counts_both_signs_on_the_spelling():
    v = w((0, 1), (1, 1), (0, -1))
    assert lambda_count(v, 0) == 2
    assert lambda_count(v, 1) == 1
    assert lambda_count(FreeWord(), 0) == 0


def test_lambda_count_doubles_on_canonical_form():
    v = w((0, 1), (1, 1), (0, -1))
    z = canonical_form(v, FreeWord.letter(2))
    assert lambda_count(z, 0) == 2 * lambda_count(v, 0)
    assert lambda_count(z, 1) == 2 * lambda_count(v, 1)
    assert lambda_count(z, 2) == 1


def test_norm_and_exponent_sum():
    word = w((0, 1), (1, 1), (1, -1), (0, 1), (2, -1))
    assert word.norm() == 3
    assert word.exponent_sum(0) == 2
    assert word.exponent_sum(1) == 0
    assert word.same_element(w((0, 1), (0, 1), (2, -1)))

import random

from core_groups.grigorchuk import (
    GrigorchukRealization,
    OmegaSequence,
    grigorchuk_sections,
    is_trivial,
    reduce_word,
    section_length_bound,
)
from growth_engine.ball import enumerate_ball

FIRST = OmegaSequence("", "012")


def random_reduced(rng, length):
    return reduce_word("".join(rng.choice("abcd") for _ in range(length)))


def test_generators_are_involutions_and_klein():
    for letter in "abcd":
        assert is_trivial(letter * 2, FIRST)
    assert is_trivial("bcd", FIRST)
    assert reduce_word("bc") == "d"


def test_no_generator_is_trivial_in_the_first_group():
    for letter in "abcd":
        assert not is_trivial(letter, FIRST)


def test_constant_sequence_kills_one_letter():
    assert is_trivial("b", OmegaSequence("", "2"))
    assert is_trivial("c", OmegaSequence("", "1"))
    assert is_trivial("d", OmegaSequence("", "0"))
    assert not is_trivial("d", OmegaSequence("0", "1"))


def test_orders_in_the_first_group():
    assert is_trivial("ad" * 4, FIRST) and not is_trivial("ad" * 2, FIRST)
    assert is_trivial("ac" * 8, FIRST) and not is_trivial("ac" * 4, FIRST)
    assert is_trivial("ab" * 16, FIRST) and not is_trivial("ab" * 8, FIRST)


def test_sections_shrink():
    rng = random.Random(3)
    for _ in range(300):
        w = random_reduced(rng, rng.randrange(2, 30))
        if w.count("a") % 2:
            continue
        left, right = grigorchuk_sections(w, FIRST)
        assert len(left) <= section_length_bound(len(w))
        assert len(right) <= section_length_bound(len(w))


def test_torsion_power_of_two():
    r = GrigorchukRealization("G", FIRST)
    rng = random.Random(17)
    for _ in range(50):
        x = r.evaluate_word(r.parse_word(random_reduced(rng, rng.randrange(1, 12))))
        assert r.order_is_power_of_two(x)


def test_equal_elements_share_a_key():
    r = GrigorchukRealization("G", FIRST)
    rng = random.Random(23)
    for _ in range(50):
        x = r.evaluate_word(r.parse_word(random_reduced(rng, 8)))
        y = r.multiply(x, r.evaluate_word(r.parse_word("ad" * 4)))
        assert r.equal(x, y)
        assert r.canonical_key(x) == r.canonical_key(y)


def test_every_element_of_the_radius_six_ball_is_two_torsion():
    r = GrigorchukRealization("G", FIRST)
    ball = enumerate_ball(r, 6)
    assert all(r.order_is_power_of_two(m.element) for m in ball.members)

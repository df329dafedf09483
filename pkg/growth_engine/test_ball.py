import itertools

import pytest

from core_groups.realization import make_realization
from growth_engine import ball as ball_module
from growth_engine.ball import enumerate_ball
from shared.errors import BallCapExceeded
from shared.schemas import GroupSpec


def realize(**kwargs):
    return make_realization(GroupSpec(**kwargs))


def word_oracle_gamma(r, n):
    """Count distinct elements over all words of length <= n."""
    alphabet = [x for _, x in r.alphabet()]
    seen = {r.canonical_key(r.identity)}
    for length in range(1, n + 1):
        for letters in itertools.product(alphabet, repeat=length):
            x = r.identity
            for s in letters:
                x = r.multiply(x, s)
            seen.add(r.canonical_key(x))
    return len(seen)


def lamplighter_oracle_gamma(m, n):
    """
    Count Z/m wr Z elements of word length <= n from the length formula:
    lit lamps cost min(v, m - v) each, plus the shortest cursor path from 0
    that visits every lit lamp and stops at the final position k.
    """
    def times(p, q):
        out = [0] * (n + 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q[:n + 1 - i]):
                out[i + j] += a * b
        return out

    lamp = [0] * (n + 1)
    for v in range(m):
        if min(v, m - v) <= n:
            lamp[min(v, m - v)] += 1
    lit = [lamp[0] - 1] + lamp[1:]

    total = 0
    for k in range(-n, n + 1):
        for left in range(-n, min(0, k) + 1):
            for right in range(max(0, k), n + 1):
                travel = (right - left) + min(right - k - left, right + k - left)
                if travel > n:
                    continue
                forced = (left < min(0, k)) + (right > max(0, k))
                counts = [1] + [0] * n
                for _ in range(forced):
                    counts = times(counts, lit)
                for _ in range(right - left + 1 - forced):
                    counts = times(counts, lamp)
                total += sum(counts[:n - travel + 1])
    return total


def test_radius_zero_is_identity():
    r = realize(kind="free", rank=2)
    ball = enumerate_ball(r, 0)
    assert len(ball) == 1
    assert r.is_identity(ball.members[0].element)


def test_free_ball_of_radius_two():
    assert len(enumerate_ball(realize(kind="free", rank=2), 2)) == 17


def test_lattice_ball_of_radius_three():
    assert len(enumerate_ball(realize(kind="zn", dimension=2), 3)) == 25


@pytest.mark.parametrize("spec", [
    dict(kind="lamplighter", modulus=2),
    dict(kind="lamplighter", modulus=3),
    dict(kind="heisenberg"),
    dict(kind="bs", bs_p=1, bs_q=2),
])
def test_ball_matches_word_enumeration(spec):
    r = realize(**spec)
    ball = enumerate_ball(r, 4)
    assert len(ball) == word_oracle_gamma(r, 4)


def test_layers_are_geodesic():
    r = realize(kind="lamplighter", modulus=2)
    ball = enumerate_ball(r, 5)
    for member in ball.members[1:]:
        neighbors = [r.multiply(member.element, s) for _, s in r.alphabet()]
        distances = [ball.members[i].distance for i in map(ball.find, neighbors) if i is not None]
        assert member.distance - 1 in distances
        assert min(distances) == member.distance - 1


def test_worker_count_does_not_change_the_ball():
    r = realize(kind="lamplighter", modulus=2)
    serial = enumerate_ball(r, 6, workers=1)
    parallel = enumerate_ball(r, 6, workers=4)
    assert [m.key for m in serial.members] == [m.key for m in parallel.members]
    assert [m.distance for m in serial.members] == [m.distance for m in parallel.members]


def test_cap_exceeded_keeps_last_complete_ball():
    r = realize(kind="free", rank=2)
    with pytest.raises(BallCapExceeded) as info:
        enumerate_ball(r, 3, cap=10)
    assert info.value.radius == 2
    assert info.value.partial.radius == 1
    assert len(info.value.partial) == 5
    assert "cap exceeded at radius 2" in str(info.value)


def test_find_locates_members_and_rejects_outsiders():
    r = realize(kind="free", rank=2)
    ball = enumerate_ball(r, 2)
    xy = r.evaluate_word(r.parse_word("xy"))
    assert ball.members[ball.find(xy)].distance == 2
    assert ball.find(r.evaluate_word(r.parse_word("xyx"))) is None


def test_grigorchuk_ball_uses_exact_equality():
    r = realize(kind="grigorchuk", prefix="", period="012")
    ball = enumerate_ball(r, 2)
    assert ball.sphere_sizes() == [1, 4, 6]


@pytest.mark.parametrize("modulus", [2, 3])
def test_lamplighter_length_formula_agrees_with_words(modulus):
    r = realize(kind="lamplighter", modulus=modulus)
    assert [lamplighter_oracle_gamma(modulus, n) for n in range(5)] == [word_oracle_gamma(r, n) for n in range(5)]


def test_lamplighter_ball_of_radius_ten():
    ball = enumerate_ball(realize(kind="lamplighter", modulus=2), 10)
    gamma = [sum(ball.sphere_sizes()[:n + 1]) for n in range(11)]
    assert gamma == [lamplighter_oracle_gamma(2, n) for n in range(11)]
    assert gamma[:3] == [1, 4, 10]


def test_cap_checked_while_the_layer_is_built(monkeypatch):
    monkeypatch.setattr(ball_module, "BATCH_PER_WORKER", 2)
    r = realize(kind="free", rank=2)
    with pytest.raises(BallCapExceeded) as info:
        enumerate_ball(r, 3, cap=20)
    # radius 3 adds 36 elements; the first batch of two frontier words already passes the cap
    assert info.value.radius == 3
    assert info.value.size < len(enumerate_ball(r, 3))
    assert info.value.partial.radius == 2

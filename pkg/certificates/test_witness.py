from decimal import Decimal

import pytest

from certificates.witness import check_certificate_against_table, t_alpha, verify_witness, witness_search
from core_groups.base import GeneratorWord
from core_groups.realization import make_realization
from growth_engine.ball import enumerate_ball
from growth_engine.growth import growth_table, omega_bounds
from shared.errors import BudgetExceededError
from shared.schemas import GroupSpec


def realize(**kwargs):
    return make_realization(GroupSpec(**kwargs))


def words(r, v, w):
    return r.parse_word(v), r.parse_word(w)


def test_t_alpha_definition():
    r = realize(kind="free", rank=2)
    v, w = words(r, "x", "y")
    assert r.equal(t_alpha(r, v, w, [0]), r.evaluate_word(v))
    assert r.equal(t_alpha(r, v, w, [1, 0]), r.evaluate_word(r.parse_word("yxx")))


def test_t_alpha_lamplighter_distinct():
    r = realize(kind="lamplighter", modulus=2)
    v, w = words(r, "t", "a")
    assert not r.equal(t_alpha(r, v, w, [1, 1]), t_alpha(r, v, w, [1, 0]))


def test_lamplighter_witness():
    r = realize(kind="lamplighter", modulus=2)
    cert = verify_witness(r, *words(r, "t", "a"), p_max=10)
    assert cert.injective
    assert cert.cost == 2
    assert cert.omega_lower == Decimal("1.414213562373")
    assert cert.bound_label == "certified-if-free"
    assert cert.gamma_lower(7) == 8
    assert cert.gamma_lower(21) is None


def test_identity_words_collide_at_first_level():
    r = realize(kind="free", rank=2)
    cert = verify_witness(r, GeneratorWord(), GeneratorWord(), p_max=4)
    assert not cert.injective
    assert cert.collision == ("0", "1")
    assert cert.omega_lower is None


def test_lattice_collision_is_reproducible():
    r = realize(kind="zn", dimension=2)
    v, w = words(r, "x", "y")
    cert = verify_witness(r, v, w, p_max=6)
    assert not cert.injective
    alpha, beta = cert.collision
    assert alpha != beta
    first = t_alpha(r, v, w, [int(c) for c in alpha])
    second = t_alpha(r, v, w, [int(c) for c in beta])
    assert r.equal(first, second)


def test_budget_is_enforced():
    r = realize(kind="free", rank=2)
    with pytest.raises(BudgetExceededError):
        verify_witness(r, *words(r, "x", "y"), p_max=10, cap=100)


def test_search_lamplighter():
    r = realize(kind="lamplighter", modulus=2)
    cert = witness_search(r, max_word_len=2, p_max=8)
    assert (cert.v, cert.w, cert.cost) == ("t", "a", 2)
    assert cert.omega_lower == Decimal("1.414213562373")


def test_search_free_group():
    r = realize(kind="free", rank=2)
    cert = witness_search(r, max_word_len=1, p_max=8)
    assert (cert.v, cert.w) == ("x", "y")


def test_search_baumslag_solitar():
    r = realize(kind="bs", bs_p=1, bs_q=2)
    cert = witness_search(r, max_word_len=2, p_max=8)
    assert cert is not None
    assert cert.cost <= 4
    assert cert.omega_lower >= Decimal("1.189207115002")


def test_search_lattice_finds_nothing():
    r = realize(kind="zn", dimension=2)
    assert witness_search(r, max_word_len=2, p_max=6) is None


@pytest.mark.parametrize("spec, v, w", [
    (dict(kind="lamplighter", modulus=2), "t", "a"),
    (dict(kind="free", rank=2), "x", "y"),
    (dict(kind="bs", bs_p=1, bs_q=2), "t", "a"),
])
def test_certificates_are_sound_against_measured_growth(spec, v, w):
    r = realize(**spec)
    cert = verify_witness(r, *words(r, v, w), p_max=8)
    assert cert.injective
    table = growth_table(enumerate_ball(r, 6))
    assert check_certificate_against_table(cert, table) == []
    estimate = omega_bounds(table)
    assert all(cert.omega_lower <= u for u in estimate.upper)

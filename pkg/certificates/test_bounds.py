from decimal import Decimal

import pytest

from certificates.bounds import crosscheck_metabelian, degree_bound
from core_groups.realization import make_realization
from shared.errors import SpecValueError
from shared.schemas import GroupSpec


def test_degree_one_constants():
    bound = degree_bound(1)
    assert (bound.s, bound.alpha, bound.beta) == (2, 48, 44)
    assert abs(bound.omega_alpha - Decimal("1.0145453349375")) < Decimal("1e-11")
    assert bound.omega_beta >= bound.omega_alpha


def test_degree_two_alpha():
    assert degree_bound(2).alpha == 192


def test_beta_never_exceeds_alpha():
    for d in range(1, 21):
        bound = degree_bound(d)
        assert bound.beta <= bound.alpha == 12 * 4 ** d


def test_degree_must_be_positive():
    with pytest.raises(SpecValueError):
        degree_bound(0)


def test_crosscheck_lamplighter():
    r = make_realization(GroupSpec(kind="lamplighter", modulus=2))
    report = crosscheck_metabelian(r, radius=8, p_max=8)
    assert report.status == "PASSED"
    assert abs(report.witness_margin - Decimal("0.3997")) < Decimal("0.0001")
    assert report.upper_margin > 0
    assert report.witness.omega_lower <= report.upper


def test_crosscheck_baumslag_solitar():
    r = make_realization(GroupSpec(kind="bs", bs_p=1, bs_q=2))
    report = crosscheck_metabelian(r, radius=6, p_max=8)
    assert report.status == "PASSED"
    assert report.witness.cost <= 4


def test_crosscheck_not_applicable_to_lattice():
    r = make_realization(GroupSpec(kind="zn", dimension=2))
    report = crosscheck_metabelian(r, radius=4, p_max=4)
    assert report.status == "NOT-APPLICABLE"
    assert report.witness is None

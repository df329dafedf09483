import pytest

from shared.schemas import GroupSpec
from topology.convergence import convergence_radius, grigorchuk_prefix_sequence, limit_growth_experiment

Z = GroupSpec(kind="zn", dimension=1)
LIMIT = GroupSpec(kind="grigorchuk", prefix="", period="012")


@pytest.mark.parametrize("n", range(4, 13))
def test_integers_against_cyclic(n):
    assert convergence_radius(Z, GroupSpec(kind="cyclic", order=n), max_radius=8) == n // 2 - 1


def test_identical_specs_agree_everywhere():
    assert convergence_radius(LIMIT, LIMIT, max_radius=5) == 5


def test_root_mismatch_gives_minus_one():
    # constant omega = 2 kills b, so b is a loop at the root
    killed = GroupSpec(kind="grigorchuk", prefix="", period="2")
    assert convergence_radius(LIMIT, killed, max_radius=3) == -1


def test_convergence_monotone_in_smaller_radius():
    a, b = Z, GroupSpec(kind="cyclic", order=10)
    full = convergence_radius(a, b, max_radius=8)
    for max_radius in range(full + 1):
        assert convergence_radius(a, b, max_radius=max_radius) == max_radius


def test_constant_sequence_rows_are_identical():
    rows = limit_growth_experiment(LIMIT, [LIMIT, LIMIT], m=4)
    assert [(r.conv_radius, r.gamma_i_m, r.upper_i_m) for r in rows] == [(4, rows[0].gamma_lim_m, rows[0].upper_i_m)] * 2
    assert not any(r.flagged for r in rows)


def test_grigorchuk_prefix_sequence_converges():
    sequence = grigorchuk_prefix_sequence(count=4)
    assert sequence[1].prefix == "012012" and sequence[1].period == "1"
    rows = limit_growth_experiment(LIMIT, sequence, m=8)
    assert [r.common_prefix for r in rows] == [3, 6, 9, 12]
    radii = [r.conv_radius for r in rows]
    assert radii == sorted(radii)
    for row in rows:
        if row.conv_radius >= 8:
            assert row.gamma_i_m == row.gamma_lim_m
            assert not row.flagged


def test_far_member_is_flagged():
    far = GroupSpec(kind="grigorchuk", prefix="", period="0")
    rows = limit_growth_experiment(LIMIT, [far], m=4)
    assert rows[0].conv_radius < 4
    assert rows[0].flagged
    assert rows[0].common_prefix == 1


def test_filler_defaults_to_a_symbol_other_than_the_period_head():
    assert grigorchuk_prefix_sequence(period="120", count=1)[0].period == "0"
    assert grigorchuk_prefix_sequence(period="012", count=1, filler="0")[0].period == "0"


def test_non_grigorchuk_rows_have_no_common_prefix():
    rows = limit_growth_experiment(Z, [GroupSpec(kind="cyclic", order=20)], m=4)
    assert rows[0].common_prefix is None
    assert rows[0].conv_radius == 4
    assert rows[0].gamma_i_m == rows[0].gamma_lim_m == 9


def test_zero_filler_shares_one_more_symbol():
    sequence = grigorchuk_prefix_sequence(count=2, filler="0")
    rows = limit_growth_experiment(LIMIT, sequence, m=3)
    assert [r.common_prefix for r in rows] == [4, 7]

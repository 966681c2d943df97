from fractions import Fraction

import pytest

from mapenum.oriented import enumerate_oriented_moments
from mapenum.unoriented import enumerate_unoriented_moments
from mapenum.wick import MomentSpec, goe_moment, gue_moment, profiles_up_to


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gue_quadratic(n):
    assert gue_moment(MomentSpec({2: 1}, n)) == n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_goe_quadratic(n):
    assert goe_moment(MomentSpec({2: 1}, n)) == n + 1


def test_quartic_values():
    assert gue_moment(MomentSpec({4: 1}, 2)) == Fraction(9, 2)
    assert gue_moment(MomentSpec({4: 1}, 3)) == Fraction(19, 3)
    assert goe_moment(MomentSpec({4: 1}, 2)) == Fraction(23, 2)
    assert goe_moment(MomentSpec({4: 1}, 3)) == Fraction(38, 3)


@pytest.mark.parametrize("profile", ["1", "3", "1,2", "2,3,2"])
def test_odd_moments_vanish(profile):
    assert gue_moment(MomentSpec(profile, 2)) == 0
    assert goe_moment(MomentSpec(profile, 2)) == 0


def test_size_limits():
    with pytest.raises(ValueError):
        MomentSpec({10: 1}, 2)
    with pytest.raises(ValueError):
        MomentSpec({2: 1}, 5)
    with pytest.raises(ValueError):
        MomentSpec({2: 1}, 0)


def test_profile_catalogue():
    profiles = profiles_up_to(8)
    assert len(profiles) == 2 + 5 + 11 + 22
    assert all(p.total_darts % 2 == 0 for p in profiles)


@pytest.mark.parametrize("profile", ["2", "4", "1,1", "3,3", "2,2", "1,3", "6"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_moment_identities(profile, n):
    spec = MomentSpec(profile, n)
    edges = spec.profile.edges
    assert gue_moment(spec) == enumerate_oriented_moments(profile).power_sum(n, edges)
    assert goe_moment(spec) == enumerate_unoriented_moments(profile).power_sum(n, edges)

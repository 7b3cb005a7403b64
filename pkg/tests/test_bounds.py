"""Tests for the anticanonical volume bound M(n, eps) and its grid oracle."""

from fractions import Fraction

import pytest

from seshadri.bounds import (
    VolumeBoundParams,
    best_volume_bound,
    conjectured_optimal_comparison,
    grid_confirms_best,
    grid_volume_bound_minimum,
    volume_bound,
    volume_bound_predicate,
)
from seshadri.wps import WeightVector, wps_anticanonical_volume

ONE = Fraction(1)


# -- the raw two-term bound ----------------------------------------------------


def test_volume_bound_example_n2():
    params = VolumeBoundParams(2, ONE, Fraction(3, 4), Fraction(1, 8), Fraction(1, 16))
    assert volume_bound(params) == 1024


def test_volume_bound_example_n1():
    params = VolumeBoundParams(1, ONE, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
    assert volume_bound(params) == 8


def test_params_reject_infeasible_a():
    with pytest.raises(ValueError, match="a"):
        VolumeBoundParams(2, ONE, Fraction(1, 2), Fraction(1, 8), Fraction(1, 16))


def test_params_reject_budget_overflow():
    with pytest.raises(ValueError, match="a \\+ b \\+ c"):
        VolumeBoundParams(2, ONE, Fraction(3, 4), Fraction(1, 8), Fraction(1, 8))


def test_params_reject_nonpositive_entries():
    with pytest.raises(ValueError):
        VolumeBoundParams(2, ONE, Fraction(3, 4), Fraction(0), Fraction(1, 16))
    with pytest.raises(ValueError):
        VolumeBoundParams(2, Fraction(0), Fraction(3, 4), Fraction(1, 8), Fraction(1, 16))
    with pytest.raises(ValueError):
        VolumeBoundParams(0, ONE, Fraction(3, 4), Fraction(1, 8), Fraction(1, 16))


# -- optimized bound -------------------------------------------------------------


def test_best_bound_n2_eps1():
    result = best_volume_bound(2, ONE)
    assert result.M == 100
    assert (result.a, result.b, result.c) == (
        Fraction(3, 4),
        Fraction(1, 20),
        Fraction(1, 5),
    )
    assert not result.attained


def test_best_bound_n1_eps1():
    assert best_volume_bound(1, ONE).M == 3


def test_best_bound_monotone_in_eps():
    assert best_volume_bound(2, Fraction(1, 2)).M > best_volume_bound(2, ONE).M


def test_best_bound_rejects_out_of_regime_eps():
    with pytest.raises(ValueError):
        best_volume_bound(2, Fraction(0))
    with pytest.raises(ValueError):
        best_volume_bound(2, Fraction(-1))
    with pytest.raises(ValueError):
        best_volume_bound(2, Fraction(2))
    with pytest.raises(ValueError):
        best_volume_bound(2, Fraction(5, 2))


def test_optimal_params_sit_on_the_open_boundary():
    # The infimum is approached as a + b + c -> 1: the reported parameters sum
    # to exactly 1 and are therefore not themselves feasible.
    result = best_volume_bound(3, Fraction(1, 2))
    assert result.a + result.b + result.c == 1
    with pytest.raises(ValueError):
        VolumeBoundParams(3, Fraction(1, 2), result.a, result.b, result.c)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("eps", (Fraction(1, 4), Fraction(1, 2), ONE))
def test_interior_points_sandwich_the_infimum(n, eps):
    # shrinking b and c by q scales both balanced terms by q^-n exactly
    result = best_volume_bound(n, eps)
    shrink = 1 - Fraction(1, 1000)
    params = VolumeBoundParams(n, eps, result.a, result.b * shrink, result.c * shrink)
    assert volume_bound(params) == result.M * (ONE / shrink) ** n > result.M


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("eps", (Fraction(1, 4), Fraction(1, 2), ONE))
def test_best_bound_growth_window(n, eps):
    m = best_volume_bound(n, eps).M
    assert m <= Fraction(8**n * n ** (2 * n), eps**n)
    assert m >= n**n


# -- grid oracle -----------------------------------------------------------------


def test_grid_confirms_flagship_value():
    assert grid_confirms_best(2, ONE, 256)
    assert grid_volume_bound_minimum(2, ONE, 256) == Fraction(65536, 625)


@pytest.mark.parametrize("n", (1, 2, 3))
@pytest.mark.parametrize("eps", (Fraction(1, 2), ONE, Fraction(3, 2)))
def test_grid_never_beats_the_closed_form(n, eps):
    closed = best_volume_bound(n, eps).M
    for resolution in (16, 64, 256):
        grid = grid_volume_bound_minimum(n, eps, resolution)
        # a coarse grid may contain no feasible triple at all; that never
        # contradicts the closed form, it just fails to probe it
        if grid is None:
            assert resolution == 16
        else:
            assert grid >= closed
        assert grid_confirms_best(n, eps, resolution)


def test_grid_minimum_tightens_with_resolution():
    coarse = grid_volume_bound_minimum(2, ONE, 16)
    fine = grid_volume_bound_minimum(2, ONE, 1024)
    closed = best_volume_bound(2, ONE).M
    assert coarse >= fine >= closed


# -- predicate and comparison column -----------------------------------------------


def test_predicate_examples():
    assert volume_bound_predicate(Fraction(8), 2, ONE)
    assert volume_bound_predicate(Fraction(9), 2, ONE)
    assert not volume_bound_predicate(Fraction(101), 2, ONE)


@pytest.mark.parametrize("n", range(2, 5))
def test_family_volumes_inside_their_own_window(n):
    # each member (1,1,d,...,d) has eps = n-1+2/d; its volume obeys the bound
    # computed at half the excess-over-(n-1) part of that window
    for d in range(1, 21):
        vol = wps_anticanonical_volume(WeightVector((1, 1) + (d,) * (n - 1)))
        assert volume_bound_predicate(vol, n, Fraction(1, d))


def test_conjectured_comparison_column():
    assert conjectured_optimal_comparison(2, ONE) == 4
    assert conjectured_optimal_comparison(3, Fraction(1, 2)) == 54

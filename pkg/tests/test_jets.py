"""Tests for jet separation of linear systems and moving-Seshadri estimates."""

import random
from fractions import Fraction

import pytest

from seshadri.exactmath import WPolynomial
from seshadri.jets import (
    CurveBound,
    LinearSystem,
    MultConstraint,
    SeshadriEstimate,
    SpanConstraint,
    blowup_anticanonical_series,
    blowup_line_bound,
    jet_separation,
    moving_seshadri_lower,
    random_rational_point,
    seshadri_upper_via_curve,
)

ORIGIN = (Fraction(0), Fraction(0))


def small_point(rng, nvars):
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(nvars))


# -- jet separation ------------------------------------------------------------


def test_complete_cubics_separate_3_jets():
    rng = random.Random(2)
    x = random_rational_point(rng, 2)
    assert jet_separation(LinearSystem(2, 3), x) == 3


def test_cubics_through_a_point_separate_2_jets_elsewhere():
    rng = random.Random(3)
    system = LinearSystem(2, 3, [MultConstraint(ORIGIN, 1)])
    assert system.dimension == 9
    x = random_rational_point(rng, 2)
    assert jet_separation(system, x) == 2


def test_empty_system_has_base_point_everywhere():
    system = LinearSystem(2, 3, [MultConstraint(ORIGIN, 4)])
    assert system.dimension == 0
    assert jet_separation(system, (Fraction(1), Fraction(2))) == -1


def test_base_point_gives_minus_one():
    system = LinearSystem(2, 3, [MultConstraint(ORIGIN, 1)])
    assert jet_separation(system, ORIGIN) == -1


def test_high_order_vanishing_lowers_separation_at_the_point():
    # At the assigned point itself, jets of order < the forced multiplicity
    # all vanish, so separation fails at s = 0 already.
    system = LinearSystem(2, 4, [MultConstraint(ORIGIN, 2)])
    assert jet_separation(system, ORIGIN) == -1


def test_span_constraint_restricts_the_system():
    # Restrict degree-1 polynomials to span{1, s+t}: order-1 jets at a point
    # need 3 independent directions, so separation drops to 0.
    full = LinearSystem(2, 1)
    one = WPolynomial.constant(1, 2)
    s_plus_t = WPolynomial({(1, 0): 1, (0, 1): 1}, 2)
    system = LinearSystem(2, 1, [SpanConstraint((one, s_plus_t))])
    assert system.dimension == 2
    x = (Fraction(1, 3), Fraction(2, 5))
    assert jet_separation(full, x) == 1
    assert jet_separation(system, x) == 0


@pytest.mark.parametrize(
    "nvars,degree",
    [(1, d) for d in range(1, 17)]
    + [(2, d) for d in range(1, 9)]
    + [(3, d) for d in range(1, 5)],
)
def test_complete_systems_separate_exactly_degree_jets(nvars, degree):
    # s(O(m*d)) = m*d at every point; the grid covers m <= 4, d <= 4 per
    # ambient dimension, capped so the largest rank computation stays small.
    rng = random.Random(100 * nvars + degree)
    x = small_point(rng, nvars)
    assert jet_separation(LinearSystem(nvars, degree), x) == degree


def test_five_random_points_agree_on_the_generic_value():
    rng = random.Random(17)
    system = LinearSystem(2, 3, [MultConstraint(ORIGIN, 1)])
    values = [jet_separation(system, random_rational_point(rng, 2)) for _ in range(5)]
    assert max(values) == 2
    assert all(v == 2 for v in values)


# -- curve bounds --------------------------------------------------------------


def test_curve_bound_line_through_base_point():
    assert seshadri_upper_via_curve(Fraction(3), 1, True) == CurveBound(Fraction(3), True)


def test_curve_bound_arithmetic():
    assert seshadri_upper_via_curve(Fraction(4), 2, False) == CurveBound(Fraction(2), False)
    assert seshadri_upper_via_curve(Fraction(0), 1, False) == CurveBound(Fraction(0), False)


def test_curve_bound_rejects_bad_inputs():
    with pytest.raises(ValueError):
        seshadri_upper_via_curve(Fraction(3), 0, False)
    with pytest.raises(ValueError):
        seshadri_upper_via_curve(Fraction(-1), 1, False)


# -- moving Seshadri estimates ---------------------------------------------------


def test_complete_series_lower_bound_is_the_degree():
    rng = random.Random(5)
    x = small_point(rng, 2)
    est = moving_seshadri_lower(lambda m: LinearSystem(2, 3 * m), x, 2)
    assert est.lower == 3
    assert est.s_values == (3, 6)
    assert est.upper is None and not est.certified_equal


def test_blowup_series_lower_bound_certified_by_line():
    rng = random.Random(6)
    series = blowup_anticanonical_series(2, ORIGIN)
    x = random_rational_point(rng, 2)
    est = moving_seshadri_lower(series, x, 3, blowup_line_bound(2))
    assert est.s_values == (2, 4, 6)
    assert est.lower == 2
    assert est.upper == 2
    assert est.certified_equal


def test_empty_series_gives_minus_one():
    series = blowup_anticanonical_series(2, ORIGIN)

    def starved(m):
        # degree 3m but multiplicity 3m forced at the base point: no sections
        # separate jets at a second point beyond the trivial cone directions
        return LinearSystem(2, 3 * m, [MultConstraint(ORIGIN, 4 * m)])

    x = (Fraction(1), Fraction(1))
    est = moving_seshadri_lower(starved, x, 1)
    assert est.lower == -1
    del series


def test_blowup_lower_never_exceeds_ambient_seshadri():
    # The blowup value 2 never exceeds eps(-K of the plane) = 3, for any m_max.
    series = blowup_anticanonical_series(2, ORIGIN)
    rng = random.Random(8)
    x = random_rational_point(rng, 2)
    for m_max in (1, 2, 3, 4):
        est = moving_seshadri_lower(series, x, m_max)
        assert est.lower <= 3


def test_strict_curve_bound_holds_per_multiple():
    # Viewing the same systems inside the plane, the line through the assigned
    # base point meets the base locus: the per-m separation stays strictly
    # below m times the bound (degree 3, multiplicity 1).
    rng = random.Random(9)
    series = blowup_anticanonical_series(2, ORIGIN)
    x = random_rational_point(rng, 2)
    bound = seshadri_upper_via_curve(Fraction(3), 1, True)
    est = moving_seshadri_lower(series, x, 3, bound)
    assert bound.strict
    for m, s in zip(est.m_values, est.s_values):
        assert s < m * bound.bound
    assert not est.certified_equal


def test_estimate_rejects_lower_above_upper():
    with pytest.raises(ValueError):
        SeshadriEstimate(
            lower=Fraction(3),
            upper=Fraction(2),
            m_values=(1,),
            s_values=(3,),
        )


def test_linear_system_dimension_bound():
    system = LinearSystem(2, 3, [MultConstraint(ORIGIN, 2)])
    assert system.dimension == 10 - 3
    assert system.dimension <= 10


def test_random_point_heights_are_bounded():
    rng = random.Random(10)
    for _ in range(20):
        p = random_rational_point(rng, 3, height=50)
        assert len(p) == 3
        assert all(abs(c.numerator) <= 50 and c.denominator <= 50 for c in p)

"""Tests for the exact-arithmetic substrate: Q(sqrt(D)) scalars, weighted
polynomials with jet extraction, and fraction-free linear algebra."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seshadri.exactmath import (
    INFINITY,
    ExactMatrix,
    QuadExt,
    WPolynomial,
    determinant,
    exact_rank,
    format_polynomial,
    format_scalar,
    graded_lex_monomials,
    is_negative_definite,
    jet_basis_size,
    jet_coefficients,
    multiplicity_at,
    nullspace_basis,
    parse_polynomial,
    parse_scalar,
    rref,
    solve_unique,
)

# -- strategies ----------------------------------------------------------------

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


@st.composite
def quad_scalars(draw, D=2):
    return QuadExt(draw(small_fractions), draw(small_fractions), D)


@st.composite
def polynomials(draw, nvars=2, max_degree=4, max_terms=5):
    coeffs = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_degree)) for _ in range(nvars))
        coeffs[e] = draw(small_fractions)
    return WPolynomial(coeffs, nvars)


def nonzero(strategy):
    return strategy.filter(lambda f: not f.is_zero())


# -- scalars -------------------------------------------------------------------


def test_quadext_rejects_non_squarefree_discriminant():
    with pytest.raises(ValueError):
        QuadExt(Fraction(1), Fraction(1), 4)
    with pytest.raises(ValueError):
        QuadExt(Fraction(1), Fraction(1), 1)


def test_quadext_basic_arithmetic():
    r2 = QuadExt(Fraction(0), Fraction(1), 2)
    assert r2 * r2 == 2
    assert (1 + r2) * (1 - r2) == -1
    assert (1 + r2) - r2 == 1
    assert r2**3 == 2 * r2
    assert (r2 / r2) == 1
    assert 1 / (1 + r2) == -1 + r2  # (1+sqrt2)^-1 = sqrt2 - 1


def test_quadext_division_matches_multiplication():
    a = QuadExt(Fraction(3, 4), Fraction(-2, 5), 2)
    b = QuadExt(Fraction(1, 3), Fraction(7, 2), 2)
    assert (a / b) * b == a


@given(quad_scalars())
def test_quadext_norm_identity(x):
    # (a + b sqrt D)(a - b sqrt D) = a^2 - D b^2
    prod = x * x.conjugate()
    assert prod == x.a**2 - 2 * x.b**2
    assert prod == x.norm()


@given(quad_scalars(), quad_scalars(), quad_scalars())
def test_quadext_ring_laws(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x


@given(quad_scalars())
def test_quadext_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(small_fractions)
def test_fraction_format_parse_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


def test_format_scalar_examples():
    assert format_scalar(Fraction(4, 5)) == "4/5"
    assert format_scalar(Fraction(3)) == "3"
    assert format_scalar(QuadExt(Fraction(1, 2), Fraction(-1, 3), 2)) == "1/2-1/3*sqrt(2)"


# -- polynomials ---------------------------------------------------------------


def test_multiplicity_product_of_linear_forms():
    st_poly = parse_polynomial("s*t", ("s", "t"))
    assert multiplicity_at(st_poly, (0, 0)) == 2


def test_multiplicity_lowest_degree_term_wins():
    f = parse_polynomial("t^2 + s^7", ("s", "t"))
    assert multiplicity_at(f, (0, 0)) == 2


def test_multiplicity_of_zero_is_infinite():
    assert multiplicity_at(WPolynomial.zero(2), (0, 0)) == INFINITY
    assert WPolynomial.zero(2).multiplicity() == INFINITY


def test_multiplicity_at_shifted_point():
    f = parse_polynomial("(s - 1)^2 * t", ("s", "t"))
    assert multiplicity_at(f, (1, 0)) == 3
    assert multiplicity_at(f, (0, 0)) == 1


@given(nonzero(polynomials()), nonzero(polynomials()))
@settings(max_examples=60)
def test_multiplicity_is_additive_on_products(f, g):
    x = (Fraction(0), Fraction(0))
    assert multiplicity_at(f * g, x) == multiplicity_at(f, x) + multiplicity_at(g, x)


def test_jet_coefficients_reads_off_linear_terms():
    f = parse_polynomial("1 + 2*s + 3*t", ("s", "t"))
    assert jet_coefficients(f, (0, 0), 1) == [1, 2, 3]


def test_jet_coefficients_double_root():
    f = parse_polynomial("(s - 1)^2", ("s",))
    assert jet_coefficients(f, (Fraction(1),), 1) == [0, 0]


def test_jet_coefficients_product_at_shifted_point():
    # s*t at (1,1) expands to 1 + u + v + u*v in shifted coordinates.
    f = parse_polynomial("s*t", ("s", "t"))
    assert jet_coefficients(f, (1, 1), 2) == [1, 1, 1, 0, 1, 0]


def test_jet_coefficients_length():
    f = parse_polynomial("s^2 + t^3", ("s", "t"))
    for order in range(4):
        assert len(jet_coefficients(f, (2, 3), order)) == jet_basis_size(2, order)


@given(polynomials(), polynomials(), small_fractions, small_fractions)
@settings(max_examples=40)
def test_jet_coefficients_linear_in_the_polynomial(f, g, a, b):
    x = (Fraction(1, 2), Fraction(-1, 3))
    lhs = jet_coefficients(a * f + b * g, x, 3)
    jf = jet_coefficients(f, x, 3)
    jg = jet_coefficients(g, x, 3)
    assert lhs == [a * u + b * v for u, v in zip(jf, jg)]


def test_graded_lex_order_is_degree_then_reverse_lex():
    assert graded_lex_monomials(2, 2) == [
        (0, 0),
        (1, 0),
        (0, 1),
        (2, 0),
        (1, 1),
        (0, 2),
    ]


def test_polynomial_parse_format_round_trip():
    for text in ("s*t", "t^2 + s^7", "1 + 2*s + 3*t", "(s - 1)^2", "s^2/4 - t/3"):
        f = parse_polynomial(text, ("s", "t"))
        assert parse_polynomial(format_polynomial(f), ("s", "t")) == f


def test_parse_polynomial_sqrt_token_requires_discriminant():
    f = parse_polynomial("t^2 - 2*s^2 + sqrt(2)*s*t", ("s", "t"), D=2)
    assert f.coeffs[(1, 1)] == QuadExt(Fraction(0), Fraction(1), 2)
    with pytest.raises(ValueError):
        parse_polynomial("sqrt(2)*s", ("s", "t"))


def test_weighted_degrees():
    f = WPolynomial({(2, 0): Fraction(1), (0, 1): Fraction(1)}, 2)
    assert f.min_weighted_degree((1, 3)) == 2
    assert f.max_weighted_degree((1, 3)) == 3
    assert not f.is_weighted_homogeneous((1, 3))
    assert f.is_weighted_homogeneous((1, 2))


def test_substitute_variable():
    # t |-> u + s^2 inside t^2: (u + s^2)^2
    f = WPolynomial({(0, 2): Fraction(1)}, 2)
    g = WPolynomial({(0, 1): Fraction(1), (2, 0): Fraction(1)}, 2)
    expected = parse_polynomial("t^2 + 2*s^2*t + s^4", ("s", "t"))
    assert f.substitute(1, g) == expected


# -- linear algebra ------------------------------------------------------------


def test_rank_of_identity():
    assert exact_rank(ExactMatrix.from_rows([[1, 0], [0, 1]])) == 2


def test_rank_ignores_repeated_rows():
    m = ExactMatrix.from_rows([[1, 2, 3], [1, 2, 3], [0, 1, 1]])
    assert exact_rank(m) == 2


def test_rank_of_cubic_jet_map_through_one_point():
    # Plane cubics vanishing at the origin: the nine monomials of degree 1..3.
    # Their order-2 jet matrix at a random rational point has full rank 6.
    basis = [e for e in graded_lex_monomials(2, 3) if sum(e) >= 1]
    assert len(basis) == 9
    x = (Fraction(2, 3), Fraction(5, 7))
    cols = [jet_coefficients(WPolynomial.monomial(e), x, 2) for e in basis]
    m = ExactMatrix.from_rows([[col[i] for col in cols] for i in range(6)])
    assert (m.rows, m.cols) == (6, 9)
    assert exact_rank(m) == 6


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=3, max_size=3))
def test_rank_invariant_under_row_swap_and_scaling(rows):
    m = ExactMatrix.from_rows([[Fraction(x) for x in row] for row in rows])
    r = m.row_list()
    swapped = ExactMatrix.from_rows([r[2], r[1], r[0]])
    scaled = ExactMatrix.from_rows([[Fraction(5, 3) * x for x in r[0]], r[1], r[2]])
    assert exact_rank(swapped) == exact_rank(m)
    assert exact_rank(scaled) == exact_rank(m)


def test_rank_over_quadratic_extension():
    r2 = QuadExt(Fraction(0), Fraction(1), 2)
    # second row is sqrt(2) times the first
    m = ExactMatrix.from_rows([[1, r2], [r2, 2]])
    assert exact_rank(m) == 1


def test_determinant():
    m = ExactMatrix.from_rows([[Fraction(1, 2), 1], [3, 4]])
    assert determinant(m) == Fraction(1, 2) * 4 - 3


def test_rref_and_nullspace():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    _, pivots = rref(m)
    assert pivots == [0]
    basis = nullspace_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert all(
            sum(m.entries[i][j] * v[j] for j in range(3)) == 0 for i in range(2)
        )


def test_solve_unique():
    m = ExactMatrix.from_rows([[2, 1], [1, 3]])
    sol = solve_unique(m, [5, 10])
    assert sol == [Fraction(1), Fraction(3)]
    singular = ExactMatrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(ValueError):
        solve_unique(singular, [1, 1])


def test_negative_definiteness():
    assert is_negative_definite(ExactMatrix.from_rows([[-2, 1], [1, -2]]))
    assert not is_negative_definite(ExactMatrix.from_rows([[-2, 3], [3, -2]]))
    assert not is_negative_definite(ExactMatrix.from_rows([[0]]))
    assert not is_negative_definite(ExactMatrix.from_rows([[-10, 1], [1, 0]]))

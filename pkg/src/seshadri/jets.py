"""Jet-separation engine: exact s(W, x) for explicit linear systems, moving
Seshadri lower bounds over finitely many multiples, and curve-based upper
bounds.

A linear system lives in one fixed affine chart: polynomials of total degree
<= d in n variables, cut down by exact linear constraints.  "Very general
point" is realized by sampling random rational points of large height from an
explicitly passed RNG, so runs are reproducible given the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple, Union

from .exactmath import (
    ExactMatrix,
    WPolynomial,
    exact_rank,
    graded_lex_monomials,
    jet_basis_size,
    jet_coefficients,
    nullspace_basis,
)

Point = Tuple[Fraction, ...]


def as_point(coords: Sequence) -> Point:
    return tuple(Fraction(c) for c in coords)


def random_rational_point(rng: random.Random, nvars: int, height: int = 1000) -> Point:
    """Random point with numerators in [-height, height] and denominators in
    [1, height]; off any fixed proper closed subset with overwhelming
    probability."""
    return tuple(
        Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(nvars)
    )


@dataclass(frozen=True)
class MultConstraint:
    """Vanishing to order >= order at a point: all jets of order < order are 0."""

    point: Point
    order: int

    def __post_init__(self):
        object.__setattr__(self, "point", as_point(self.point))
        if self.order < 1:
            raise ValueError("multiplicity constraints need order >= 1")


@dataclass(frozen=True)
class SpanConstraint:
    """Membership in the span of an explicit list of polynomials."""

    basis: Tuple[WPolynomial, ...]


Constraint = Union[MultConstraint, SpanConstraint]


class LinearSystem:
    """Subspace of the degree <= d polynomials in n variables cut out by exact
    linear constraints; the basis is computed once at construction."""

    def __init__(self, nvars: int, degree: int, constraints: Sequence[Constraint] = ()):
        if nvars < 1 or degree < 0:
            raise ValueError("need nvars >= 1 and degree >= 0")
        self.nvars = nvars
        self.degree = degree
        self.constraints = tuple(constraints)
        self.monomials = graded_lex_monomials(nvars, degree)
        ambient = len(self.monomials)
        basis: list[list[Fraction]] = [
            [Fraction(1) if i == j else Fraction(0) for j in range(ambient)]
            for i in range(ambient)
        ]
        for constraint in self.constraints:
            basis = self._apply(basis, constraint)
            if not basis:
                break
        self.basis_vectors = basis
        self.basis_polynomials = [self._to_poly(v) for v in basis]
        self.dimension = len(basis)

    def _to_poly(self, vector: Sequence) -> WPolynomial:
        return WPolynomial(
            {e: c for e, c in zip(self.monomials, vector) if c}, self.nvars
        )

    def _to_vector(self, f: WPolynomial) -> list[Fraction]:
        if f.nvars != self.nvars:
            raise ValueError("polynomial arity mismatch")
        if f.total_degree() > self.degree:
            raise ValueError("polynomial degree exceeds the system degree")
        index = {e: i for i, e in enumerate(self.monomials)}
        v = [Fraction(0)] * len(self.monomials)
        for e, c in f.coeffs.items():
            v[index[e]] = c
        return v

    def _apply(self, basis, constraint) -> list:
        if not basis:
            return basis
        if isinstance(constraint, MultConstraint):
            conditions = self._jet_rows(basis, constraint.point, constraint.order - 1)
        elif isinstance(constraint, SpanConstraint):
            span = [self._to_vector(f) for f in constraint.basis]
            if not span:
                return []
            # x lies in the span iff x is orthogonal to the span's annihilator.
            annihilator = nullspace_basis(ExactMatrix.from_rows(span))
            conditions = [
                [sum(a * b for a, b in zip(v, bvec)) for bvec in basis] for v in annihilator
            ]
        else:
            raise TypeError(f"unknown constraint {constraint!r}")
        if not conditions:
            return basis
        combos = nullspace_basis(ExactMatrix.from_rows(conditions))
        return [
            [sum(c * bvec[j] for c, bvec in zip(combo, basis)) for j in range(len(basis[0]))]
            for combo in combos
        ]

    def _jet_rows(self, basis, point: Point, order: int) -> list[list[Fraction]]:
        """Rows = jet conditions (one per monomial of degree <= order at the
        point), columns = current basis elements."""
        jets = [jet_coefficients(self._to_poly(v), point, order) for v in basis]
        return [[jets[j][i] for j in range(len(basis))] for i in range(len(jets[0]))]


def jet_separation(system: LinearSystem, point: Sequence) -> int:
    """Largest s >= 0 such that the system surjects onto all Taylor jets of
    order <= s at the point; -1 if the point is a base point (or the system is
    empty)."""
    point = as_point(point)
    if system.dimension == 0:
        return -1
    shifted = [f.shift(point) for f in system.basis_polynomials]
    best = -1
    for s in range(system.degree + 1):
        target = jet_basis_size(system.nvars, s)
        if target > system.dimension:
            break
        monos = graded_lex_monomials(system.nvars, s)
        rows = [[g.coeffs.get(e, Fraction(0)) for e in monos] for g in shifted]
        if exact_rank(ExactMatrix.from_rows(rows)) == target:
            best = s
        else:
            break
    return best


@dataclass(frozen=True)
class CurveBound:
    """Upper bound (L.C)/mult_x(C) on jet separation growth; strict when the
    curve meets the base locus."""

    bound: Fraction
    strict: bool


def seshadri_upper_via_curve(
    pairing: Fraction | int, mult: int, meets_base_locus: bool
) -> CurveBound:
    """Curve test: s(W, x) <= (L.C)/mult_x(C) per unit of L, strict if C meets
    the base locus of W."""
    if mult < 1:
        raise ValueError("curve multiplicity at the point must be >= 1")
    pairing = Fraction(pairing)
    if pairing < 0:
        raise ValueError("intersection number L.C must be >= 0")
    return CurveBound(pairing / mult, meets_base_locus)


@dataclass(frozen=True)
class SeshadriEstimate:
    """Best lower bound s(mL, x)/m over the computed m, with an optional curve
    upper bound; certified_equal when the two meet."""

    lower: Fraction
    upper: Optional[Fraction]
    m_values: Tuple[int, ...]
    s_values: Tuple[int, ...]
    certified_equal: bool = field(default=False)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds the registered upper bound")


def moving_seshadri_lower(
    series: Callable[[int], LinearSystem],
    point: Sequence,
    m_max: int = 3,
    curve_bound: Optional[CurveBound] = None,
) -> SeshadriEstimate:
    """Evaluate s(series(m), x)/m for 1 <= m <= m_max and keep the best; if a
    curve bound is registered, report it as the upper bound and certify
    equality when reached."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    point = as_point(point)
    m_values = tuple(range(1, m_max + 1))
    s_values = tuple(jet_separation(series(m), point) for m in m_values)
    lower = max(Fraction(s, m) for m, s in zip(m_values, s_values))
    upper = curve_bound.bound if curve_bound is not None else None
    certified = upper is not None and lower == upper
    return SeshadriEstimate(lower, upper, m_values, s_values, certified)


def blowup_anticanonical_series(
    nvars: int, base_point: Sequence
) -> Callable[[int], LinearSystem]:
    """Series m -> {degree m*(n+1) forms with multiplicity >= m at the base
    point}: the anticanonical systems of the blowup of P^n at one point,
    restricted to an affine chart."""
    base_point = as_point(base_point)

    def series(m: int) -> LinearSystem:
        return LinearSystem(nvars, m * (nvars + 1), [MultConstraint(base_point, m)])

    return series


def blowup_line_bound(nvars: int) -> CurveBound:
    """Upper bound from the strict transform of a line through the blown-up
    point: pairing (n+1) - 1 = n with multiplicity 1, away from the base locus."""
    return seshadri_upper_via_curve(Fraction(nvars), 1, False)

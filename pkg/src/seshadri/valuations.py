"""Monomial and quadratic-twisted valuations on affine space.

Covers valuation evaluation, log discrepancies, the two-sided multiplicity
comparison (Izumi-type inequality), minimal multiplicities of valuation
ideals, and a graded brute-force certifier for the minimal multiplicity of
rational members of the twisted ideal (s^m, t - sqrt(2)*s^(m-1))^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Tuple

from .exactmath import (
    INFINITY,
    ExactMatrix,
    QuadExt,
    WPolynomial,
    nullspace_basis,
    rational_parts,
    rref,
)

SQRT2 = QuadExt(Fraction(0), Fraction(1), 2)


@dataclass(frozen=True)
class Twist:
    """Coordinate change t -> t - c*s^e ahead of monomial evaluation: the
    valuation measures exponents in (s, y) with y = t - c*s^e."""

    e: int
    c: QuadExt = SQRT2

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("twist exponent e must be >= 1")
        if not isinstance(self.c, QuadExt) or self.c.is_rational:
            raise ValueError("twist constant must be a quadratic irrational")


@dataclass(frozen=True)
class MonomialValuation:
    """Divisorial valuation with nu(x_i) = weights[i]; an optional twist (only
    in two variables) replaces the second coordinate by y = t - c*s^e."""

    weights: Tuple[int, ...]
    twist: Optional[Twist] = None

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if not ws or any(w < 1 for w in ws):
            raise ValueError(f"weights must be positive integers, got {ws}")
        if self.twist is not None and len(ws) != 2:
            raise ValueError("twisted valuations are only supported in two variables")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def rewrite(self, f: WPolynomial) -> WPolynomial:
        """Express f in the valuation's coordinates: substitute t = y + c*s^e
        when twisted, identity otherwise."""
        if self.twist is None:
            return f
        if f.nvars != 2:
            raise ValueError("twisted valuations act on two-variable polynomials")
        substitution = WPolynomial(
            {(0, 1): Fraction(1), (self.twist.e, 0): self.twist.c}, 2
        )
        return f.substitute(1, substitution)


def valuation_eval(nu: MonomialValuation, f: WPolynomial):
    """nu(f): min over terms of <weights, exponent> after the twist rewrite;
    +inf iff f = 0."""
    if f.nvars != nu.nvars:
        raise ValueError("polynomial/valuation arity mismatch")
    g = nu.rewrite(f)
    return g.min_weighted_degree(nu.weights)


def discrepancy(nu: MonomialValuation) -> int:
    """Log discrepancy minus one: sum(weights) - 1.  A twist is a local
    coordinate change and does not affect it."""
    return sum(nu.weights) - 1


def maximal_ideal_valuation(nu: MonomialValuation) -> int:
    """nu(m_x) = min over coordinate functions of their valuation."""
    if nu.twist is None:
        return min(nu.weights)
    w0, w1 = nu.weights
    # nu(s) = w0; nu(t) = nu(y + c*s^e) = min(w1, w0*e).
    return min(w0, w1, w0 * nu.twist.e)


@dataclass(frozen=True)
class IzumiCheck:
    lower: object
    value: object
    upper: object
    holds: bool
    note: Optional[str] = None


def izumi_check(nu: MonomialValuation, f: WPolynomial) -> IzumiCheck:
    """Two-sided comparison nu(m_x)*mult <= nu(f) <= (sum(w)-1)*mult for a
    valuation centered at the origin.  The zero polynomial reports all three
    quantities as +inf and holds trivially."""
    note = None
    if nu.twist is not None:
        note = "nu(m_x) computed as min over coordinate functions after the twist rewrite"
    if f.is_zero():
        return IzumiCheck(INFINITY, INFINITY, INFINITY, True, note)
    mult = f.multiplicity()
    value = valuation_eval(nu, f)
    lower = maximal_ideal_valuation(nu) * mult
    upper = discrepancy(nu) * mult
    return IzumiCheck(lower, value, upper, lower <= value <= upper, note)


@dataclass(frozen=True)
class ValuationIdealQuery:
    """Level-k valuation ideal I_k = {f : nu(f) >= discrepancy(nu) * k}, with
    an optional restriction to rational-coefficient members."""

    valuation: MonomialValuation
    k: int
    field_restriction: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("ideal level k must be >= 1")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def ideal_min_multiplicity(query: ValuationIdealQuery) -> tuple[int, Fraction]:
    """Minimal multiplicity of a nonzero member of I_k for an untwisted
    monomial valuation, and lambda = min_mult / k.

    Closed form ceil(a*k / max(w)) with a = sum(w) - 1, re-verified here by an
    exhaustive lattice scan below the closed-form value.
    """
    nu = query.valuation
    if nu.twist is not None:
        raise ValueError("twisted valuations: use galois_min_mult instead")
    if query.field_restriction:
        raise ValueError("field restriction only applies to twisted ideals; use galois_min_mult")
    a = discrepancy(nu)
    target = a * query.k
    closed = -(-target // max(nu.weights))  # ceil
    for total in range(closed):
        for v in _compositions(total, nu.nvars):
            if sum(w * e for w, e in zip(nu.weights, v)) >= target:
                raise AssertionError(
                    f"lattice scan beat the closed form at {v} (this is a bug)"
                )
    return closed, Fraction(closed, query.k)


# -- rational members of the twisted ideal (s^m, t - sqrt(2)*s^(m-1))^k -------


@dataclass(frozen=True)
class GaloisMinMult:
    """Brute-force certificate: minimal multiplicity over nonzero rational
    members of the twisted ideal, the 2mk/(2m-1) comparison bound, and a
    canonical minimal witness."""

    min_mult: int
    bound: Fraction
    witness: Optional[WPolynomial]


def _twisted_monomial_in_st(a: int, b: int, m: int) -> dict:
    """Coefficients of s^a * y^b in (s, t), where y = t - sqrt(2)*s^(m-1)."""
    out = {}
    for j in range(b + 1):
        coeff = math.comb(b, j) * (-SQRT2) ** (b - j)
        out[(a + (m - 1) * (b - j), j)] = coeff
    return out


def _rational_members_of_piece(m: int, k: int, level: int):
    """Rational-coefficient members of the weight-`level` graded piece of
    (s^m, y)^k, wt(s) = 1, wt(t) = wt(y) = m - 1; returns (columns, vectors)
    where columns are (s,t)-exponents and vectors span the rational members."""
    generators = []
    for b in range(level // (m - 1) + 1):
        a = level - (m - 1) * b
        if a >= m * max(k - b, 0):
            generators.append((a, b))
    if not generators:
        return [], []
    columns = sorted(
        {(level - (m - 1) * j, j) for j in range(level // (m - 1) + 1)},
        key=lambda e: (e[0] + e[1], e),
    )
    col_index = {e: i for i, e in enumerate(columns)}
    rows = []
    for a, b in generators:
        vec = [QuadExt(Fraction(0), Fraction(0), 2)] * len(columns)
        for exp, c in _twisted_monomial_in_st(a, b, m).items():
            vec[col_index[exp]] = c
        rows.append(vec)
    # c_r = a_r + sqrt(2) b_r: the combination is rational iff for every
    # column the sqrt(2)-part sum a_r*irr + b_r*rat vanishes.
    n = len(rows)
    eqs = []
    for col in range(len(columns)):
        eq = []
        for r in range(n):
            _, irr = rational_parts(rows[r][col])
            eq.append(irr)
        for r in range(n):
            rat, _ = rational_parts(rows[r][col])
            eq.append(rat)
        eqs.append(eq)
    members = []
    for kernel in nullspace_basis(ExactMatrix.from_rows(eqs)):
        a_part, b_part = kernel[:n], kernel[n:]
        vec = []
        for col in range(len(columns)):
            total = Fraction(0)
            for r in range(n):
                rat, irr = rational_parts(rows[r][col])
                total += a_part[r] * rat + 2 * b_part[r] * irr
            vec.append(total)
        if any(vec):
            members.append(vec)
    return columns, members


def _primitive(coeffs: dict) -> dict:
    denom = math.lcm(*(c.denominator for c in coeffs.values()))
    scaled = {e: c * denom for e, c in coeffs.items()}
    g = math.gcd(*(abs(c.numerator) for c in scaled.values()))
    return {e: Fraction(c, g) for e, c in scaled.items()}


def galois_min_mult(
    m: int, k: int, degree_cap: Optional[int] = None
) -> GaloisMinMult:
    """Scan the weighted-graded pieces of (s^m, t - sqrt(2)*s^(m-1))^k for
    rational-coefficient members of minimal multiplicity at the origin.

    The scan runs over weighted degrees up to degree_cap (default 4mk, doubled
    automatically up to 16mk if nothing is found); once a member of
    multiplicity mu is known, degrees beyond (m-1)*mu cannot improve it and the
    scan stops.  The result always satisfies min_mult >= ceil(2mk/(2m-1)).
    """
    if m < 2 or k < 1:
        raise ValueError("need m >= 2 and k >= 1")
    cap = degree_cap if degree_cap is not None else 4 * m * k
    if cap < 1:
        raise ValueError("degree_cap must be >= 1")
    ceiling = max(16 * m * k, cap)
    bound = Fraction(2 * m * k, 2 * m - 1)
    best_mult: float | int = INFINITY
    best_witness: Optional[WPolynomial] = None
    while True:
        for level in range(k * (m - 1), cap + 1):
            if best_mult is not INFINITY and level > (m - 1) * best_mult:
                break
            columns, members = _rational_members_of_piece(m, k, level)
            if members:
                reduced, pivots = rref(ExactMatrix.from_rows(members))
                first_row, first_col = reduced[0], pivots[0]
                mult = sum(columns[first_col])
                if mult < best_mult:
                    best_mult = mult
                    coeffs = {columns[i]: c for i, c in enumerate(first_row) if c}
                    best_witness = WPolynomial(_primitive(coeffs), 2)
        # Minimality is proved once every level up to (m-1)*best_mult has been
        # scanned: deeper pieces only contain higher-multiplicity members.
        if best_mult is not INFINITY and (m - 1) * best_mult <= cap:
            break
        if cap >= ceiling:
            if best_mult is not INFINITY:
                raise RuntimeError(
                    f"found multiplicity {best_mult} but could not certify minimality "
                    f"within weighted degree {cap}; raise degree_cap"
                )
            raise RuntimeError(
                f"no rational member of (s^{m}, t-sqrt(2)*s^{m-1})^{k} found up to "
                f"weighted degree {cap}"
            )
        cap = min(2 * cap, ceiling)
    min_mult = int(best_mult)
    if min_mult < -(-2 * m * k // (2 * m - 1)):
        raise AssertionError(
            f"brute force found multiplicity {min_mult} below the 2mk/(2m-1) bound"
        )
    return GaloisMinMult(min_mult, bound, best_witness)


def twisted_ideal_contains(m: int, k: int, f: WPolynomial) -> bool:
    """Membership test for (s^m, y)^k with y = t - sqrt(2)*s^(m-1): rewrite f
    in (s, y) and check every monomial s^a y^b satisfies a >= m*max(k-b, 0)."""
    nu = MonomialValuation((1, 1), Twist(m - 1))
    g = nu.rewrite(f)
    return all(a >= m * max(k - b, 0) for a, b in g.coeffs)

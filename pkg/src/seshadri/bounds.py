"""Explicit anticanonical volume bound in terms of the dimension n and a
Seshadri lower bound eps: the two-term constant max{b^-n (1-eps/2)^n, c^-n n^n}
over the feasible parameter region

    a, b, c > 0,  a + b + c < 1,  (n-1+eps)*a >= n-1+eps/2,

its closed-form infimum, and an independent grid-search oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class VolumeBoundParams:
    """A feasible choice of the free parameters (a, b, c) for dimension n and
    Seshadri lower bound eps."""

    n: int
    eps: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("eps", "a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.n < 1:
            raise ValueError("dimension n must be >= 1")
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        for name in ("a", "b", "c"):
            if getattr(self, name) <= 0:
                raise ValueError(f"constraint violated: {name} must be positive")
        if self.a + self.b + self.c >= 1:
            raise ValueError("constraint violated: a + b + c must be < 1")
        if (self.n - 1 + self.eps) * self.a < self.n - 1 + self.eps / 2:
            raise ValueError(
                "constraint violated: (n-1+eps)*a must be >= n-1+eps/2"
            )


def volume_bound(params: VolumeBoundParams) -> Fraction:
    """max{b^-n (1-eps/2)^n, c^-n n^n} for a feasible parameter choice."""
    n, eps = params.n, params.eps
    term_b = ((1 - eps / 2) / params.b) ** n
    term_c = (Fraction(n) / params.c) ** n
    return max(term_b, term_c)


@dataclass(frozen=True)
class VolumeBoundResult:
    """Infimum of the two-term constant over the open feasible region; never
    attained (the optimum sits on the boundary a + b + c = 1)."""

    M: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    attained: bool = False


def best_volume_bound(n: int, eps: Fraction) -> VolumeBoundResult:
    """Closed-form infimum: put a at its constraint floor, then split the
    remaining budget s = 1 - a so the two max-terms agree, giving
    M = ((n+1-eps/2)/s)^n."""
    eps = Fraction(eps)
    if n < 1:
        raise ValueError("dimension n must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if eps >= 2:
        raise ValueError(
            "eps >= 2 is outside the construction's regime: the 1 - eps/2 "
            "multiplier must stay positive"
        )
    a = (n - 1 + eps / 2) / (n - 1 + eps)
    s = 1 - a  # = (eps/2) / (n-1+eps)
    denom = (1 - eps / 2) + n
    b = s * (1 - eps / 2) / denom
    c = s * Fraction(n) / denom
    m_value = ((n + 1 - eps / 2) / s) ** n
    return VolumeBoundResult(m_value, a, b, c)


def grid_volume_bound_minimum(
    n: int, eps: Fraction, resolution: int = 256
) -> Optional[Fraction]:
    """Minimum of volume_bound over the feasible grid (i/R, j/R, k/R), an
    independent oracle for the closed form.

    For fixed a the max of a decreasing and an increasing term is minimized
    where they cross, so only the grid neighbours of the crossing need to be
    evaluated; spending the whole remaining budget on b + c always helps.
    """
    eps = Fraction(eps)
    if eps <= 0 or eps >= 2:
        raise ValueError("grid oracle needs 0 < eps < 2")
    r = resolution
    one_minus_half_eps = 1 - eps / 2
    best: Optional[Fraction] = None
    for i in range(1, r - 1):
        a = Fraction(i, r)
        if (n - 1 + eps) * a < n - 1 + eps / 2:
            continue
        budget = r - 1 - i  # j + k <= budget, both >= 1
        if budget < 2:
            continue
        crossing = budget * one_minus_half_eps / (one_minus_half_eps + n)
        floor = int(crossing)
        for j in (floor, floor + 1):
            j = min(max(j, 1), budget - 1)
            params = VolumeBoundParams(n, eps, a, Fraction(j, r), Fraction(budget - j, r))
            value = volume_bound(params)
            if best is None or value < best:
                best = value
    return best


def grid_confirms_best(n: int, eps: Fraction, resolution: int = 256) -> bool:
    """True when no feasible grid point beats the closed-form infimum."""
    closed = best_volume_bound(n, eps).M
    grid = grid_volume_bound_minimum(n, eps, resolution)
    return grid is None or grid >= closed


def volume_bound_predicate(vol: Fraction, n: int, eps: Fraction) -> bool:
    """vol <= M(n, eps) for the closed-form bound."""
    return Fraction(vol) <= best_volume_bound(n, eps).M


def conjectured_optimal_comparison(n: int, eps: Fraction) -> Fraction:
    """Comparison column n^n/eps (the conjectured optimal order); reported,
    never asserted."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return Fraction(n**n) / eps

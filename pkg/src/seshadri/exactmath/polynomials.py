"""Multivariate polynomials with exact coefficients.

A ``WPolynomial`` maps exponent tuples to nonzero scalars and may carry an
optional weight vector for weighted gradings.  The fixed monomial order used
for jet bases everywhere in this package is *graded lexicographic*: monomials
are sorted by total degree, ties broken by descending exponent tuple, so for
two variables (s, t) the degree <= 1 basis reads (1, s, t).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .scalars import Fraction as _Fraction  # noqa: F401  (re-export convenience)
from .scalars import QuadExt, Scalar, to_scalar

Exponent = Tuple[int, ...]
CoeffMap = Dict[Exponent, Scalar]

INFINITY = math.inf


def _binomial(n: int, k: int) -> int:
    return math.comb(n, k)


class WPolynomial:
    """Exact multivariate polynomial, optionally weighted-graded.

    coeffs maps exponent tuples (one entry per variable) to nonzero scalars;
    zero coefficients are dropped on construction.
    """

    __slots__ = ("coeffs", "nvars", "weights")

    def __init__(
        self,
        coeffs: CoeffMap | Iterable[tuple[Exponent, Scalar]],
        nvars: int,
        weights: Optional[Sequence[int]] = None,
    ):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        clean: CoeffMap = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = to_scalar(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.coeffs = clean
        self.nvars = nvars
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != nvars or any(w < 1 for w in weights):
                raise ValueError(f"bad weight vector {weights}")
        self.weights = weights

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, weights=None) -> "WPolynomial":
        return cls({}, nvars, weights)

    @classmethod
    def constant(cls, c, nvars: int, weights=None) -> "WPolynomial":
        return cls({(0,) * nvars: to_scalar(c)}, nvars, weights)

    @classmethod
    def monomial(cls, exp: Exponent, c=1, weights=None) -> "WPolynomial":
        return cls({tuple(exp): to_scalar(c)}, len(tuple(exp)), weights)

    @classmethod
    def variable(cls, i: int, nvars: int, weights=None) -> "WPolynomial":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls({exp: Fraction(1)}, nvars, weights)

    # -- ring structure ---------------------------------------------------

    def _check_compatible(self, other: "WPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            other = WPolynomial.constant(other, self.nvars)
        self._check_compatible(other)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return WPolynomial(out, self.nvars, self.weights)

    __radd__ = __add__

    def __neg__(self):
        return WPolynomial({e: -c for e, c in self.coeffs.items()}, self.nvars, self.weights)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            other = WPolynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            c = to_scalar(other)
            return WPolynomial({e: v * c for e, v in self.coeffs.items()}, self.nvars, self.weights)
        self._check_compatible(other)
        out: CoeffMap = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return WPolynomial(out, self.nvars, self.weights)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = WPolynomial.constant(1, self.nvars, self.weights)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, WPolynomial):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == WPolynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"WPolynomial({self.coeffs!r}, nvars={self.nvars})"

    def __str__(self):
        return format_polynomial(self)

    # -- structure queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self):
        """Largest total degree of a term; -inf for the zero polynomial."""
        if not self.coeffs:
            return -INFINITY
        return max(sum(e) for e in self.coeffs)

    def multiplicity(self):
        """Smallest total degree of a term (order of vanishing at the origin);
        +inf for the zero polynomial."""
        if not self.coeffs:
            return INFINITY
        return min(sum(e) for e in self.coeffs)

    def min_weighted_degree(self, weights: Sequence[int]):
        """min over terms of <weights, exponent>; +inf for zero."""
        if not self.coeffs:
            return INFINITY
        return min(sum(w * e for w, e in zip(weights, exp)) for exp in self.coeffs)

    def max_weighted_degree(self, weights: Sequence[int]):
        if not self.coeffs:
            return -INFINITY
        return max(sum(w * e for w, e in zip(weights, exp)) for exp in self.coeffs)

    def is_weighted_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        w = weights if weights is not None else self.weights
        if w is None:
            raise ValueError("no weight vector given")
        degs = {sum(wi * e for wi, e in zip(w, exp)) for exp in self.coeffs}
        return len(degs) <= 1

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        pt = [to_scalar(p) for p in point]
        total: Scalar = Fraction(0)
        for exp, c in self.coeffs.items():
            term = c
            for p, e in zip(pt, exp):
                if e:
                    term = term * p**e
            total = total + term
        return total

    def shift(self, point: Sequence) -> "WPolynomial":
        """Translate the origin to ``point``: returns g with g(u) = f(u + point)."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        pt = [to_scalar(p) for p in point]
        out: CoeffMap = {}
        for exp, c in self.coeffs.items():
            per_var = []
            for i, e in enumerate(exp):
                p = pt[i]
                if not p:
                    per_var.append([(e, Fraction(1))])
                else:
                    per_var.append([(j, _binomial(e, j) * p ** (e - j)) for j in range(e + 1)])
            for combo in product(*per_var):
                new_exp = tuple(j for j, _ in combo)
                coeff = c
                for _, factor in combo:
                    coeff = coeff * factor
                out[new_exp] = out.get(new_exp, Fraction(0)) + coeff
        return WPolynomial(out, self.nvars, self.weights)

    def substitute(self, i: int, g: "WPolynomial") -> "WPolynomial":
        """Replace variable i by the polynomial g (same variable space)."""
        self._check_compatible(g)
        powers: Dict[int, WPolynomial] = {0: WPolynomial.constant(1, self.nvars)}
        out = WPolynomial.zero(self.nvars, self.weights)
        for exp, c in self.coeffs.items():
            e_i = exp[i]
            if e_i not in powers:
                k = max(powers)
                acc = powers[k]
                while k < e_i:
                    acc = acc * g
                    k += 1
                    powers[k] = acc
            rest = tuple(0 if j == i else e for j, e in enumerate(exp))
            out = out + WPolynomial.monomial(rest, c) * powers[e_i]
        return WPolynomial(out.coeffs, self.nvars, self.weights)

    def truncate_degree(self, max_degree: int) -> "WPolynomial":
        return WPolynomial(
            {e: c for e, c in self.coeffs.items() if sum(e) <= max_degree},
            self.nvars,
            self.weights,
        )

    def map_coefficients(self, fn) -> "WPolynomial":
        return WPolynomial({e: fn(c) for e, c in self.coeffs.items()}, self.nvars, self.weights)


# -- monomial bases and jets --------------------------------------------------


def _compositions(total: int, parts: int) -> Iterable[Exponent]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def graded_lex_monomials(nvars: int, max_degree: int) -> list[Exponent]:
    """All exponent tuples of total degree <= max_degree in graded lex order
    (degree first, descending exponent tuple within a degree)."""
    out: list[Exponent] = []
    for d in range(max_degree + 1):
        out.extend(sorted(_compositions(d, nvars), reverse=True))
    return out


def jet_basis_size(nvars: int, order: int) -> int:
    return _binomial(nvars + order, nvars)


def multiplicity_at(f: WPolynomial, point: Sequence) -> float | int:
    """Order of vanishing of f at the point: min total degree after translating
    the point to the origin; +inf iff f = 0."""
    if f.is_zero():
        return INFINITY
    if any(to_scalar(p) for p in point):
        f = f.shift(point)
    return f.multiplicity()


def jet_coefficients(f: WPolynomial, point: Sequence, order: int) -> list[Scalar]:
    """Taylor coefficients of f at the point for all monomials of total degree
    <= order, listed in graded lex order; length C(nvars + order, nvars)."""
    if order < 0:
        raise ValueError("jet order must be >= 0")
    g = f.shift(point) if any(to_scalar(p) for p in point) else f
    return [g.coeffs.get(e, Fraction(0)) for e in graded_lex_monomials(f.nvars, order)]


# -- parsing and formatting ---------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<pow>\*\*|\^)|(?P<op>[()+\-*/]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, tokens = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot tokenize polynomial at: {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        elif m.group("pow"):
            tokens.append(("op", "^"))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    """Recursive-descent parser for +, -, *, /, ^ over variables and rational
    or sqrt(D) literals; no implicit multiplication."""

    def __init__(self, tokens, names: Sequence[str], D: Optional[int]):
        self.tokens = tokens
        self.pos = 0
        self.names = list(names)
        self.D = D

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ValueError(f"unexpected token {tok} in polynomial")
        return tok

    def parse(self) -> WPolynomial:
        out = self.expr()
        if self.peek() != (None, None):
            raise ValueError(f"trailing tokens in polynomial: {self.tokens[self.pos:]}")
        return out

    def expr(self) -> WPolynomial:
        sign = 1
        if self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        out = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> WPolynomial:
        out = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            f = self.factor()
            if op == "*":
                out = out * f
            else:
                if f.total_degree() != 0:
                    raise ValueError("division only allowed by nonzero constants")
                out = out * (Fraction(1) / f.coeffs[(0,) * f.nvars])
        return out

    def factor(self) -> WPolynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "-"):
                raise ValueError("negative exponents are not allowed")
            k = int(self.expect("num")[1])
            base = base**k
        return base

    def atom(self) -> WPolynomial:
        kind, value = self.take()
        n = len(self.names)
        if kind == "num":
            return WPolynomial.constant(Fraction(int(value)), n)
        if kind == "name":
            if value == "sqrt":
                self.expect("op", "(")
                d = int(self.expect("num")[1])
                self.expect("op", ")")
                if self.D is None:
                    raise ValueError("sqrt(...) is not allowed in this context")
                if d != self.D:
                    raise ValueError(f"sqrt({d}) not allowed here (expected sqrt({self.D}))")
                return WPolynomial.constant(QuadExt(Fraction(0), Fraction(1), d), n)
            if value in self.names:
                return WPolynomial.variable(self.names.index(value), n)
            raise ValueError(f"unknown variable {value!r} (expected one of {self.names})")
        if (kind, value) == ("op", "("):
            out = self.expr()
            self.expect("op", ")")
            return out
        if (kind, value) == ("op", "-"):
            return -self.atom()
        raise ValueError(f"unexpected token {(kind, value)} in polynomial")


def parse_polynomial(
    text: str, names: Sequence[str] = ("s", "t", "u"), D: Optional[int] = None
) -> WPolynomial:
    """Parse a polynomial string such as "t^2 - 2*s^2" or "y^2 + 2*sqrt(2)*s*y".

    names fixes the variable set (arity = len(names)); sqrt(D) literals are
    accepted only when D is given.
    """
    return _Parser(_tokenize(text), names, D).parse()


def format_polynomial(f: WPolynomial, names: Optional[Sequence[str]] = None) -> str:
    """Human-readable form with terms in descending graded lex order."""
    if f.is_zero():
        return "0"
    if names is None:
        names = ["s", "t", "u"][: f.nvars] if f.nvars <= 3 else [f"x{i}" for i in range(f.nvars)]
    parts = []
    for exp in sorted(f.coeffs, key=lambda e: (-sum(e), tuple(-x for x in e))):
        c = f.coeffs[exp]
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if isinstance(c, QuadExt) and not c.is_rational:
            coeff_str = f"({c})"
        else:
            cf = c.a if isinstance(c, QuadExt) else c
            if not factors:
                coeff_str = str(cf)
            elif cf == 1:
                coeff_str = ""
            elif cf == -1:
                coeff_str = "-"
            else:
                coeff_str = str(cf)
        body = "*".join(factors)
        if coeff_str in ("", "-"):
            text = coeff_str + body
        elif body:
            text = f"{coeff_str}*{body}"
        else:
            text = coeff_str
        parts.append(text)
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out

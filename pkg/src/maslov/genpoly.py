"""Generalized polynomials: finite sums of monomials ``a * prod x_i**d_i``.

Coefficients are complex floats, exponents exact rationals.  A
:class:`GeneralizedPolynomial` is immutable and always canonical: exponent
vectors are distinct, coefficients nonzero, terms sorted by exponent.  The
zero polynomial cannot be constructed.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, ZeroPolynomialError
from .parser import parse_product, parse_terms

__all__ = [
    "Term",
    "GeneralizedPolynomial",
    "AsymptoticProduct",
    "canonicalize",
    "parse",
    "parse_asymptotic",
    "render",
    "add",
    "multiply",
    "eval_log_abs",
    "has_nonnegative_coefficients",
]


@dataclass(frozen=True)
class Term:
    coefficient: complex
    exponent: tuple

    def __post_init__(self):
        c = complex(self.coefficient)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError(f"non-finite coefficient {c!r}")
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "exponent", tuple(Fraction(d) for d in self.exponent))


class GeneralizedPolynomial:
    """A nonzero generalized polynomial in ``dim`` variables.

    ``terms`` may be :class:`Term` objects or ``(coefficient, exponent)``
    pairs; they are merged and cleaned up on construction.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms):
        dim = int(dim)
        if dim < 1:
            raise DimensionError(f"dimension must be positive, got {dim}")
        merged = {}
        for t in terms:
            if not isinstance(t, Term):
                t = Term(*t)
            if len(t.exponent) != dim:
                raise DimensionError(f"exponent {t.exponent} does not have dimension {dim}")
            merged[t.exponent] = merged.get(t.exponent, 0j) + t.coefficient
        kept = tuple(Term(c, e) for e, c in sorted(merged.items()) if c != 0)
        if not kept:
            raise ZeroPolynomialError("polynomial cancels to zero")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", kept)

    def __setattr__(self, name, value):
        raise AttributeError("GeneralizedPolynomial is immutable")

    @classmethod
    def monomial(cls, coefficient, exponent):
        return cls(len(exponent), [(coefficient, exponent)])

    @classmethod
    def constant(cls, c, dim):
        return cls(dim, [(c, (0,) * dim)])

    @property
    def support(self):
        """The exponent set ``D``."""
        return tuple(t.exponent for t in self.terms)

    @property
    def coefficients(self):
        return tuple(t.coefficient for t in self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GeneralizedPolynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, self.terms))

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = GeneralizedPolynomial.constant(other, self.dim)
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return GeneralizedPolynomial(self.dim, [(other * t.coefficient, t.exponent) for t in self.terms])
        return multiply(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"GeneralizedPolynomial({self.dim}, {render(self)!r})"

    def log_abs(self, x, h):
        return eval_log_abs(self, x, h)


def canonicalize(raw_terms, dim=None):
    """Merge duplicate exponents and drop zero coefficients."""
    raw_terms = list(raw_terms)
    if dim is None:
        if not raw_terms:
            raise ZeroPolynomialError("empty term list")
        first = raw_terms[0]
        dim = len(first.exponent if isinstance(first, Term) else first[1])
    return GeneralizedPolynomial(dim, raw_terms)


def parse(text, dim):
    return GeneralizedPolynomial(dim, parse_terms(text, dim))


def _check_dims(f, g):
    if f.dim != g.dim:
        raise DimensionError(f"dimension mismatch: {f.dim} vs {g.dim}")


def add(f, g):
    _check_dims(f, g)
    return GeneralizedPolynomial(f.dim, f.terms + g.terms)


def multiply(f, g):
    _check_dims(f, g)
    return GeneralizedPolynomial(
        f.dim,
        [
            (s.coefficient * t.coefficient, tuple(a + b for a, b in zip(s.exponent, t.exponent)))
            for s in f.terms
            for t in g.terms
        ],
    )


def has_nonnegative_coefficients(f):
    """Sufficient test for nonnegativity on the positive orthant.

    True iff every coefficient is real and strictly positive.
    """
    return all(t.coefficient.imag == 0 and t.coefficient.real > 0 for t in f.terms)


# -- rendering ---------------------------------------------------------------


def _num(x):
    if x == int(x) and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def _exponent_text(d):
    if d.denominator == 1:
        return str(d.numerator)
    return f"({d.numerator}/{d.denominator})"


def _term_text(t, first):
    c = t.coefficient
    factors = []
    for i, d in enumerate(t.exponent, start=1):
        if d == 0:
            continue
        factors.append(f"x{i}" if d == 1 else f"x{i}^{_exponent_text(d)}")
    if c.imag == 0:
        mag, negative = abs(c.real), c.real < 0
        head = [] if (mag == 1 and factors) else [_num(mag)]
    else:
        negative = False
        sign = "-" if c.imag < 0 else "+"
        head = [f"({_num(c.real)}{sign}{_num(abs(c.imag))}i)"]
    body = "*".join(head + factors)
    if first:
        return ("-" if negative else "") + body
    return (" - " if negative else " + ") + body


def render(f):
    """Text form that :func:`parse` reads back to the same polynomial."""
    # Highest exponents first reads more naturally.
    terms = sorted(f.terms, key=lambda t: t.exponent, reverse=True)
    return "".join(_term_text(t, i == 0) for i, t in enumerate(terms))


# -- log-domain evaluation ---------------------------------------------------


def _check_point(f, x, h):
    if len(x) != f.dim:
        raise DimensionError(f"point has dimension {len(x)}, polynomial {f.dim}")
    h = float(h)
    if not h > 0:
        raise ValueError(f"h must be positive, got {h!r}")
    return h


def _dot(d, x):
    return math.fsum(float(di) * float(xi) for di, xi in zip(d, x))


def _signed_sum(units, logs):
    """Return ``(m, S)`` with ``sum units_k * exp(logs_k) == exp(m) * S``."""
    m = max(logs)
    re = math.fsum(u.real * math.exp(l - m) for u, l in zip(units, logs))
    im = math.fsum(u.imag * math.exp(l - m) for u, l in zip(units, logs))
    return m, complex(re, im)


def _units(f):
    return [t.coefficient / abs(t.coefficient) for t in f.terms]


def eval_log_abs(f, x, h):
    """``log|f(exp(x/h))|`` by signed log-sum-exp; ``-inf`` at exact zeros."""
    if isinstance(f, AsymptoticProduct):
        return f.log_abs(x, h)
    h = _check_point(f, x, h)
    logs = [math.log(abs(t.coefficient)) + _dot(t.exponent, x) / h for t in f.terms]
    m, S = _signed_sum(_units(f), logs)
    if S == 0:
        return -math.inf
    return m + math.log(abs(S))


def scaled_log_abs(f, x, h):
    """``h*log|f(exp(x/h))|``, evaluated without dividing out ``h``.

    Each term contributes ``(d, x) + h*log|a|``, which keeps the result
    within rounding of the exact value ``(d, x) + h*log|a|`` for monomials.
    """
    h = _check_point(f, x, h)
    scaled = [_dot(t.exponent, x) + h * math.log(abs(t.coefficient)) for t in f.terms]
    top = max(scaled)
    units = _units(f)
    re = math.fsum(u.real * math.exp((s - top) / h) for u, s in zip(units, scaled))
    im = math.fsum(u.imag * math.exp((s - top) / h) for u, s in zip(units, scaled))
    S = complex(re, im)
    if S == 0:
        return -math.inf
    return top + h * math.log(abs(S))


def _complex_log(f, x, h):
    """Principal ``log f(exp(x/h))`` as a complex number."""
    h = _check_point(f, x, h)
    logs = [math.log(abs(t.coefficient)) + _dot(t.exponent, x) / h for t in f.terms]
    m, S = _signed_sum(_units(f), logs)
    if S == 0:
        return complex(-math.inf, 0)
    return m + cmath.log(S)


class AsymptoticProduct:
    """``P * log(Q_1) * ... * log(Q_k)``: an asymptotic polynomial.

    Only numeric evaluation is supported.  Its dequantization is that of
    ``P`` because every log factor grows like ``1/h``.
    """

    def __init__(self, polynomial, logs=()):
        self.polynomial = polynomial
        self.logs = tuple(logs)
        for q in self.logs:
            _check_dims(polynomial, q)
        self.dim = polynomial.dim

    def log_abs(self, x, h):
        total = eval_log_abs(self.polynomial, x, h)
        for q in self.logs:
            z = _complex_log(q, x, h)
            total += math.log(abs(z)) if z != 0 else -math.inf
        return total

    def __str__(self):
        parts = [f"({render(self.polynomial)})"] + [f"log({render(q)})" for q in self.logs]
        return "*".join(parts)


def parse_asymptotic(text, dim):
    """Parse a polynomial optionally multiplied by ``log(...)`` factors.

    Returns a plain :class:`GeneralizedPolynomial` when no log appears.
    """
    if "log" not in text:
        return parse(text, dim)
    poly = GeneralizedPolynomial.constant(1, dim)
    logs = []
    for kind, raw in parse_product(text, dim):
        g = GeneralizedPolynomial(dim, raw)
        if kind == "log":
            logs.append(g)
        else:
            poly = poly * g
    return AsymptoticProduct(poly, logs)

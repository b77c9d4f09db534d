"""The dequantization transform ``f -> f_hat``.

``f_hat_h(x) = h*log|f(exp(x/h))|`` is evaluated numerically and its limit
as ``h -> 0`` is probed along a geometric schedule.  For generalized
polynomials the limit is known in closed form: the max of ``(d, x)`` over
the exponent vectors, which :func:`dequantize_symbolic` returns as a
:class:`~maslov.sublinear.PwlSublinear`.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionError
from .genpoly import (
    AsymptoticProduct,
    GeneralizedPolynomial,
    eval_log_abs,
    has_nonnegative_coefficients,
    scaled_log_abs,
)
from .polytope import newton_polytope, normal_cone_overlap
from .sublinear import support_of

__all__ = [
    "HSchedule",
    "ProbeReport",
    "dequantize_numeric",
    "dequantize_probe",
    "dequantize_symbolic",
    "in_general_position",
    "general_position_by_sampling",
    "sum_hypothesis_holds",
    "ERROR_FLOOR",
    "TIE_TOLERANCE",
]

ERROR_FLOOR = 1e-13
TIE_TOLERANCE = 1e-9
MIN_SLOPE_SAMPLES = 4


@dataclass(frozen=True)
class HSchedule:
    """Geometric sequence ``h_k = h0 * ratio**k``, ``k < steps``."""

    h0: float = 1.0
    ratio: float = 0.5
    steps: int = 20

    def __post_init__(self):
        if not self.h0 > 0:
            raise ValueError(f"h0 must be positive, got {self.h0!r}")
        if not 0 < self.ratio < 1:
            raise ValueError(f"ratio must lie in (0, 1), got {self.ratio!r}")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError(f"steps must be a positive integer, got {self.steps!r}")
        hs = self.values()
        if hs[-1] <= 0:
            raise ValueError("schedule underflows to zero")

    def values(self):
        return [self.h0 * self.ratio**k for k in range(int(self.steps))]


@dataclass
class ProbeReport:
    points: list
    hs: list
    values: list  # values[i][k] = f_hat_{h_k}(points[i])
    limits: list
    references: list
    slopes: list = field(default_factory=list)

    @property
    def errors(self):
        out = []
        for ref, row in zip(self.references, self.values):
            if ref is None:
                out.append(None)
            else:
                out.append([abs(v - ref) if math.isfinite(v) else math.inf for v in row])
        return out

    @property
    def slope(self) -> Optional[float]:
        """Median of the per-point fitted slopes, or None."""
        fitted = [s for s in self.slopes if s is not None]
        if not fitted:
            return None
        return float(np.median(fitted))


def _check_h(h):
    h = float(h)
    if not h > 0:
        raise ValueError(f"h must be positive, got {h!r}")
    return h


def dequantize_numeric(f, x, h):
    """``h*log|f(exp(x/h))|``; ``-inf`` where ``f(exp(x/h))`` vanishes."""
    h = _check_h(h)
    if len(x) != f.dim:
        raise DimensionError(f"point has dimension {len(x)}, polynomial {f.dim}")
    if isinstance(f, GeneralizedPolynomial):
        return scaled_log_abs(f, x, h)
    return h * eval_log_abs(f, x, h)


def fit_slope(hs, errors, floor=ERROR_FLOOR):
    """Least-squares slope of ``log err`` against ``log h``.

    Only errors above ``floor`` (and finite) take part; ``None`` when fewer
    than four remain.
    """
    pairs = [(h, e) for h, e in zip(hs, errors) if math.isfinite(e) and e > floor]
    if len(pairs) < MIN_SLOPE_SAMPLES:
        return None
    lh = np.log([p[0] for p in pairs])
    le = np.log([p[1] for p in pairs])
    return float(np.polyfit(lh, le, 1)[0])


def reference_polynomial(f):
    if isinstance(f, AsymptoticProduct):
        return f.polynomial
    if isinstance(f, GeneralizedPolynomial):
        return f
    return None


def dequantize_probe(f, points, schedule=None):
    """Evaluate ``f_hat_h`` at each point along ``schedule``.

    The limit estimate is the value at the smallest ``h``.  When ``f`` has a
    symbolic form the reference is the support function of its Newton
    polytope and a log-log error slope is fitted per point.
    """
    schedule = schedule or HSchedule()
    points = [tuple(float(c) for c in p) for p in points]
    if not points:
        raise ValueError("no sample points")
    hs = schedule.values()
    base = reference_polynomial(f)
    p = dequantize_symbolic(base) if base is not None else None

    values, limits, refs, slopes = [], [], [], []
    for x in points:
        row = [dequantize_numeric(f, x, h) for h in hs]
        values.append(row)
        limits.append(row[-1])
        if p is None:
            refs.append(None)
            slopes.append(None)
            continue
        ref = p(x)
        refs.append(ref)
        errs = [abs(v - ref) if math.isfinite(v) else math.inf for v in row]
        slopes.append(fit_slope(hs, errs))
    return ProbeReport(points, hs, values, limits, refs, slopes)


def dequantize_symbolic(f):
    """The sublinear limit ``x -> max_{d in D} (d, x)``.

    Coefficients play no part; they only shift ``f_hat_h`` by ``O(h)``.
    """
    if isinstance(f, AsymptoticProduct):
        f = f.polynomial
    return support_of(newton_polytope(f))


def in_general_position(f, g):
    """Exact test that ``f_hat != g_hat`` off a nowhere-dense set.

    Two piecewise-linear functions agree on an open set exactly when some
    common vertex of the Newton polytopes has overlapping open normal cones.
    """
    if f.dim != g.dim:
        raise DimensionError(f"dimension mismatch: {f.dim} vs {g.dim}")
    A, B = newton_polytope(f), newton_polytope(g)
    shared = set(A.vertices) & set(B.vertices)
    return not any(normal_cone_overlap(A, v, B, v) for v in sorted(shared))


def sum_hypothesis_holds(polys):
    """Whether ``f1 + ... + fk`` dequantizes to the max of the parts.

    Applied left to right: each partial sum and the next summand must both
    have positive coefficients or be in general position.  Partial sums
    that cancel to zero raise :class:`ZeroPolynomialError`.
    """
    polys = list(polys)
    if not polys:
        raise ValueError("no polynomials")
    acc = polys[0]
    for g in polys[1:]:
        nonneg = has_nonnegative_coefficients(acc) and has_nonnegative_coefficients(g)
        if not (nonneg or in_general_position(acc, g)):
            return False
        acc = acc + g
    return True


def general_position_by_sampling(f, g, samples=1000, seed=0, tol=TIE_TOLERANCE):
    """Statistical counterpart of :func:`in_general_position`.

    Draws standard-normal points and reports False if ``f_hat`` and
    ``g_hat`` tie (within ``tol``) at any of them.
    """
    if f.dim != g.dim:
        raise DimensionError(f"dimension mismatch: {f.dim} vs {g.dim}")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((samples, f.dim))
    F = np.array([[float(c) for c in d] for d in newton_polytope(f).vertices])
    G = np.array([[float(c) for c in d] for d in newton_polytope(g).vertices])
    fv = (X @ F.T).max(axis=1)
    gv = (X @ G.T).max(axis=1)
    return not bool(np.any(np.abs(fv - gv) <= tol))

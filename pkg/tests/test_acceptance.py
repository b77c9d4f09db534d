"""Acceptance gate.

Each criterion is a function returning ``(passed, detail)``.  The runner
times it against its budget and prints one line per criterion, under pytest
(``pytest tests/test_acceptance.py``) or directly
(``python3 tests/test_acceptance.py``).
"""

import math
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from maslov.checks import SKIPPED, check_pair
from maslov.dequant import (
    HSchedule,
    dequantize_numeric,
    dequantize_symbolic,
    fit_slope,
    general_position_by_sampling,
    in_general_position,
)
from maslov.genpoly import GeneralizedPolynomial, parse
from maslov.maxplus import maslov_oplus_h
from maslov.polytope import Polytope, hull_reduce, newton_polytope
from maslov.sampling import random_monomial, random_polynomial, random_polytope, random_sublinear
from maslov.sublinear import PwlSublinear, subdifferential, support_of

EPS = sys.float_info.epsilon


def _dot(d, x):
    return math.fsum(float(a) * b for a, b in zip(d, x))


def monomial_law():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(100):
        m = random_monomial(rng)
        (t,) = m.terms
        x = tuple(float(c) for c in rng.standard_normal(m.dim))
        for h in (1, 0.1, 0.01):
            expected = _dot(t.exponent, x) + h * math.log(abs(t.coefficient))
            worst = max(worst, abs(dequantize_numeric(m, x, h) - expected))
    return worst < 1e-9, f"max deviation {worst:.2e}"


def convergence_sandwich():
    rng = np.random.default_rng(102)
    hs = HSchedule().values()
    bound_violations = fitted = 0
    off_band = []
    for _ in range(100):
        f = random_polynomial(rng, max_terms=6, nonneg=True)
        a = [t.coefficient.real for t in f.terms]
        lo_c, hi_c = math.log(min(a)), math.log(len(a) * max(a))
        p = dequantize_symbolic(f)
        for _ in range(10):
            x = tuple(float(c) for c in rng.standard_normal(f.dim))
            px = float(p(x))
            # Rounding in f_hat_h and p(x): a few ulps of the larger magnitude.
            slack = 64 * EPS * (1 + abs(px))
            errors = []
            for h in hs:
                gap = dequantize_numeric(f, x, h) - px
                if not h * lo_c - slack <= gap <= h * hi_c + slack:
                    bound_violations += 1
                errors.append(abs(gap))
            slope = fit_slope(hs, errors)
            if slope is not None:
                fitted += 1
                if not 0.9 <= slope <= 1.1:
                    off_band.append(slope)
    detail = f"bound violations {bound_violations}/{100 * 10 * len(hs)}; slopes outside [0.9, 1.1]: {len(off_band)}/{fitted}"
    if off_band:
        detail += f" (range {min(off_band):.3f}..{max(off_band):.3f})"
    return bound_violations == 0 and not off_band, detail


def _degenerate(P):
    return len(P) <= 2


def newton_product():
    rng = np.random.default_rng(103)
    mismatches = degenerate = 0
    for i in range(200):
        dim = int(rng.integers(1, 4))
        # Every fourth pair uses monomials and binomials so that points and
        # segments occur as Newton sets.
        cap = 2 if i % 4 == 0 else 6
        f, g = random_polynomial(rng, dim, max_terms=cap), random_polynomial(rng, dim, max_terms=cap)
        A, B = newton_polytope(f), newton_polytope(g)
        degenerate += _degenerate(A) or _degenerate(B)
        mismatches += newton_polytope(f * g) != A.odot(B)
    return mismatches == 0 and degenerate > 0, f"{mismatches} mismatches in 200 pairs ({degenerate} with a point or segment)"


def newton_sum():
    rng = np.random.default_rng(104)
    mismatches = disagreements = 0
    for _ in range(200):
        dim = int(rng.integers(1, 4))
        f, g = random_polynomial(rng, dim, nonneg=True), random_polynomial(rng, dim, nonneg=True)
        mismatches += newton_polytope(f + g) != newton_polytope(f).oplus(newton_polytope(g))
    accepted = examined = 0
    while accepted < 200:
        dim = int(rng.integers(1, 4))
        f, g = random_polynomial(rng, dim), random_polynomial(rng, dim)
        examined += 1
        exact = in_general_position(f, g)
        disagreements += exact != general_position_by_sampling(f, g, samples=1000, seed=examined)
        if not exact:
            continue
        accepted += 1
        mismatches += newton_polytope(f + g) != newton_polytope(f).oplus(newton_polytope(g))
    ok = mismatches == 0 and disagreements == 0
    return ok, f"{mismatches} mismatches in 400 pairs; exact/sampling disagreements {disagreements}/{examined}"


def cancellation_counterexample():
    f, g = parse("x1", 1), parse("-x1 + 1", 1)
    s = f + g
    lhs, rhs = newton_polytope(s), newton_polytope(f).oplus(newton_polytope(g))
    strict = lhs == Polytope.point((0,)) and rhs == hull_reduce([(0,), (1,)])
    results = {r.name: r for r in check_pair(f, g)}
    statuses = {r.status for r in results.values()}
    skipped = results["newton_sum"].status == SKIPPED and "hypothesis" in results["newton_sum"].detail
    ok = not in_general_position(f, g) and strict and skipped and "FAIL" not in statuses
    return ok, f"N(f+g) = {{0}} < [0, 1]; newton_sum {results['newton_sum'].status}; statuses {sorted(statuses)}"


def duality():
    rng = np.random.default_rng(106)
    round_trip = odot = oplus = 0
    for _ in range(200):
        P = random_polytope(rng)
        round_trip += subdifferential(support_of(P)) != P
    for _ in range(200):
        dim = int(rng.integers(1, 4))
        p, q = random_sublinear(rng, dim), random_sublinear(rng, dim)
        odot += subdifferential(p.odot(q)) != subdifferential(p).odot(subdifferential(q))
        oplus += subdifferential(p.oplus(q)) != subdifferential(p).oplus(subdifferential(q))
    return round_trip + odot + oplus == 0, f"failures: round trip {round_trip}, odot {odot}, oplus {oplus}"


def _law_failures(a, b, c, unit):
    laws = [
        a.oplus(a) == a,
        a.oplus(b) == b.oplus(a),
        a.oplus(b).oplus(c) == a.oplus(b.oplus(c)),
        a.odot(b) == b.odot(a),
        a.odot(b).odot(c) == a.odot(b.odot(c)),
        a.odot(unit) == a,
        a.oplus(b).odot(c) == a.odot(c).oplus(b.odot(c)),
    ]
    return laws.count(False)


def semiring_laws():
    rng = np.random.default_rng(107)
    polytopes = sublinear = 0
    for _ in range(200):
        dim = int(rng.integers(1, 4))
        polytopes += _law_failures(*(random_polytope(rng, dim) for _ in range(3)), Polytope.unit(dim))
    for _ in range(200):
        dim = int(rng.integers(1, 4))
        sublinear += _law_failures(*(random_sublinear(rng, dim) for _ in range(3)), PwlSublinear.zero(dim))
    return polytopes + sublinear == 0, f"law failures: polytopes {polytopes}, sublinear {sublinear}"


def _ordinary(rng, nonneg):
    deg = int(rng.integers(0, 7))
    coef = [int(rng.integers(1, 4)) if nonneg else int(rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(deg + 1)]
    # Inner coefficients may vanish; the constant and leading ones may not.
    for k in range(1, deg):
        if rng.random() < 0.3:
            coef[k] = 0
    terms = [(c, (Fraction(k),)) for k, c in enumerate(coef) if c]
    return GeneralizedPolynomial(1, terms), deg


def degree_semiring():
    rng = np.random.default_rng(108)
    bad = 0
    for _ in range(100):
        (f, df), (g, dg) = _ordinary(rng, False), _ordinary(rng, False)
        bad += newton_polytope(f) != hull_reduce([(0,), (df,)])
        bad += newton_polytope(f * g) != hull_reduce([(0,), (df + dg,)])
        (f, df), (g, dg) = _ordinary(rng, True), _ordinary(rng, True)
        bad += newton_polytope(f + g) != hull_reduce([(0,), (max(df, dg),)])
    return bad == 0, f"{bad} mismatches in 100 pairs"


def maslov_bounds():
    rng = np.random.default_rng(109)
    bad = 0
    for _ in range(1000):
        u, v = rng.uniform(-100, 100, size=2)
        # h is drawn relative to |u - v| so the correction term exceeds an ulp
        # of max(u, v) and the strict lower bound is representable.
        h = max(abs(u - v), 1.0) * 10 ** rng.uniform(-1.3, 1)
        m = max(u, v)
        r = maslov_oplus_h(u, v, h)
        r2 = maslov_oplus_h(u, v, h * rng.uniform(1, 2))
        bad += not (m < r <= m + h * math.log(2) and r <= r2)
    tiny = 0
    for _ in range(100):
        u, v = rng.uniform(-1e6, 1e6, size=2)
        r = maslov_oplus_h(u, v, 1e-300)
        tiny += not (math.isfinite(r) and max(u, v) <= r <= max(u, v) + 1e-300 * math.log(2))
    r = maslov_oplus_h(1e6, 1e6, 1e-300)
    tiny += not (math.isfinite(r) and r == 1e6)
    return bad + tiny == 0, f"violations {bad}/1000; h = 1e-300 violations {tiny}/101"


CRITERIA = [
    (1, "monomial law", monomial_law, 1),
    (2, "convergence sandwich and slope", convergence_sandwich, 10),
    (3, "Newton polytope of a product", newton_product, 30),
    (4, "Newton polytope of a sum", newton_sum, 60),
    (5, "cancellation counterexample", cancellation_counterexample, None),
    (6, "duality round trip", duality, 30),
    (7, "idempotent semiring laws", semiring_laws, 60),
    (8, "degree semiring", degree_semiring, 5),
    (9, "Maslov deformation bounds", maslov_bounds, 1),
]


def evaluate(number, name, fn, budget):
    start = time.perf_counter()
    passed, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = budget is None or elapsed < budget
    limit = "" if budget is None else f" / {budget} s"
    status = "PASS" if passed and in_time else "FAIL"
    line = f"criterion {number} {status}: {name}: {detail}; {elapsed:.2f} s{limit}"
    return passed and in_time, line


@pytest.mark.parametrize("number, name, fn, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(capsys, number, name, fn, budget):
    ok, line = evaluate(number, name, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

"""Seeded random instances for law sweeps.

All generators take a :class:`numpy.random.Generator` (PCG64, seeded via
``numpy.random.default_rng(seed)``).  Sizes are kept small so exact-LP
sweeps stay fast while still producing points and segments as Newton sets.
"""

from fractions import Fraction

import numpy as np

from .genpoly import GeneralizedPolynomial
from .polytope import hull_reduce
from .sublinear import PwlSublinear

__all__ = [
    "random_exponent",
    "random_polynomial",
    "random_monomial",
    "random_polytope",
    "random_sublinear",
    "random_rational_point",
]

EXPONENT_NUMERATORS = range(-4, 5)
EXPONENT_DENOMINATORS = (1, 2, 4)


def random_dim(rng, max_dim=3):
    return int(rng.integers(1, max_dim + 1))


def random_exponent(rng, dim):
    return tuple(
        Fraction(int(rng.choice(EXPONENT_NUMERATORS)), int(rng.choice(EXPONENT_DENOMINATORS)))
        for _ in range(dim)
    )


def _coefficient(rng, nonneg, integral):
    while True:
        if integral:
            c = int(rng.integers(1, 4)) if nonneg else int(rng.integers(-3, 4))
        else:
            c = float(rng.uniform(0.1, 3.0)) if nonneg else float(rng.uniform(-3.0, 3.0))
        if c != 0:
            return c


def random_polynomial(rng, dim=None, *, max_terms=6, min_terms=1, nonneg=False, integral=False):
    """Random generalized polynomial with distinct exponents.

    Exponent entries are ``p/q`` with ``p`` in [-4, 4] and ``q`` in
    {1, 2, 4}; coefficients are uniform on [-3, 3], or [0.1, 3] with
    ``nonneg``.  ``integral`` swaps in small nonzero integer coefficients
    so ring identities can be compared exactly.
    """
    if dim is None:
        dim = random_dim(rng)
    k = int(rng.integers(min_terms, max_terms + 1))
    exps = set()
    while len(exps) < k:
        exps.add(random_exponent(rng, dim))
    return GeneralizedPolynomial(dim, [(_coefficient(rng, nonneg, integral), e) for e in sorted(exps)])


def random_monomial(rng, dim=None):
    if dim is None:
        dim = random_dim(rng)
    a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
    while a == 0:
        a = complex(rng.uniform(-3, 3), 0)
    return GeneralizedPolynomial.monomial(a, random_exponent(rng, dim))


def random_rational_point(rng, dim, max_den=8, span=2):
    """Point whose entries are ``p/q`` with ``q <= max_den``, ``|p/q| <= span``."""
    out = []
    for _ in range(dim):
        q = int(rng.integers(1, max_den + 1))
        p = int(rng.integers(-span * q, span * q + 1))
        out.append(Fraction(p, q))
    return tuple(out)


def random_polytope(rng, dim=None, max_points=6, max_den=8):
    if dim is None:
        dim = random_dim(rng)
    k = int(rng.integers(1, max_points + 1))
    return hull_reduce([random_rational_point(rng, dim, max_den) for _ in range(k)])


def random_sublinear(rng, dim=None, max_generators=6, max_den=8):
    if dim is None:
        dim = random_dim(rng)
    k = int(rng.integers(1, max_generators + 1))
    return PwlSublinear([random_rational_point(rng, dim, max_den) for _ in range(k)])


def standard_normal_points(rng, count, dim):
    return [tuple(float(c) for c in row) for row in rng.standard_normal((count, dim))]


def generator(seed):
    return np.random.default_rng(seed)

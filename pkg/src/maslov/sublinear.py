"""Piecewise-linear sublinear functions ``p(x) = max_g (g, x)``.

A :class:`PwlSublinear` is stored by its irredundant generator set, which
is the vertex set of the subdifferential at the origin.  The two therefore
share one canonical form and :func:`subdifferential` / :func:`support_of`
are exact inverses.
"""

from .errors import DimensionError
from .polytope import Polytope, as_point, hull_reduce, support_function

__all__ = ["PwlSublinear", "evaluate", "oplus", "odot", "subdifferential", "support_of"]


class PwlSublinear:
    """Max of finitely many linear functionals with rational coefficients."""

    __slots__ = ("_hull",)

    def __init__(self, generators):
        object.__setattr__(self, "_hull", hull_reduce(generators))

    @classmethod
    def _from_polytope(cls, P):
        self = object.__new__(cls)
        object.__setattr__(self, "_hull", P)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PwlSublinear is immutable")

    @property
    def dim(self):
        return self._hull.dim

    @property
    def generators(self):
        return self._hull.vertices

    @classmethod
    def linear(cls, d):
        return cls._from_polytope(Polytope.point(d))

    @classmethod
    def zero(cls, dim):
        """The zero functional, unit for ``odot``."""
        return cls._from_polytope(Polytope.unit(dim))

    def __call__(self, x):
        return evaluate(self, x)

    def __eq__(self, other):
        if not isinstance(other, PwlSublinear):
            return NotImplemented
        return self._hull == other._hull

    def __hash__(self):
        return hash(("PwlSublinear", self._hull))

    def __repr__(self):
        gens = ", ".join("(" + ", ".join(str(c) for c in g) + ")" for g in self.generators)
        return f"PwlSublinear[{self.dim}]{{{gens}}}"

    def oplus(self, other):
        return oplus(self, other)

    def odot(self, other):
        return odot(self, other)


def evaluate(p, x):
    """``max_g (g, x)``; exact for rational ``x``."""
    if len(x) != p.dim:
        raise DimensionError(f"point has dimension {len(x)}, function {p.dim}")
    return support_function(p._hull, x)


def _check(p, q):
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")


def oplus(p, q):
    """Pointwise max."""
    _check(p, q)
    return PwlSublinear(p.generators + q.generators)


def odot(p, q):
    """Pointwise sum."""
    _check(p, q)
    return PwlSublinear([tuple(a + b for a, b in zip(g, k)) for g in p.generators for k in q.generators])


def subdifferential(p):
    """``{v : (v, x) <= p(x) for all x}``, the hull of the generators."""
    return p._hull


def support_of(P):
    """The sublinear function whose subdifferential is ``P``."""
    return PwlSublinear._from_polytope(P)


def from_generators(*gens):
    return PwlSublinear([as_point(g) for g in gens])

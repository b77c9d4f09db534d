"""Convex polytopes in V-representation with exact rational vertices.

Polytopes form an idempotent semiring under the Minkowski operations:
``oplus`` is the convex hull of the union and ``odot`` the Minkowski sum.
Every polytope is stored canonically (extreme points only, sorted
lexicographically), so equality is plain tuple comparison.
"""

import json
import math
from fractions import Fraction

from .errors import DimensionError
from .lp import is_feasible

__all__ = [
    "Polytope",
    "as_point",
    "hull_reduce",
    "minkowski_odot",
    "hullunion_oplus",
    "support_function",
    "equals",
    "contains_point",
    "normal_cone_overlap",
    "newton_polytope",
    "to_json",
    "from_json",
    "SCHEMA",
]

SCHEMA = "polytope/1"


def as_point(coords):
    """Coerce an iterable of numbers to a tuple of Fractions."""
    # Floats convert to their exact binary value.
    return tuple(Fraction(c.strip()) if isinstance(c, str) else Fraction(c) for c in coords)


class Polytope:
    """Convex hull of a finite nonempty point set in Q^n.

    Build one with :func:`hull_reduce` (or ``Polytope(points)``, which does
    the same).  ``vertices`` holds exactly the extreme points, sorted.
    """

    __slots__ = ("dim", "vertices")

    def __init__(self, points):
        P = hull_reduce(points)
        object.__setattr__(self, "dim", P.dim)
        object.__setattr__(self, "vertices", P.vertices)

    @classmethod
    def _canonical(cls, dim, vertices):
        self = object.__new__(cls)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", tuple(vertices))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polytope is immutable")

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        verts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope[{self.dim}]{{{verts}}}"

    def oplus(self, other):
        return hullunion_oplus(self, other)

    def odot(self, other):
        return minkowski_odot(self, other)

    def support(self, x):
        return support_function(self, x)

    def contains(self, v):
        return contains_point(self, v)

    @classmethod
    def point(cls, v):
        v = as_point(v)
        return cls._canonical(len(v), [v])

    @classmethod
    def unit(cls, dim):
        """The multiplicative unit {0}."""
        return cls.point([0] * dim)


def _in_hull(p, others):
    """Exact test: is ``p`` a convex combination of ``others``?"""
    if not others:
        return False
    n = len(p)
    # Unknowns: lambda_1..lambda_k >= 0.  Rows: sum lambda = 1, sum lambda q = p.
    A = [[1] * len(others)]
    for j in range(n):
        A.append([q[j] for q in others])
    b = [1] + list(p)
    return is_feasible(A, b)


def _integer_coords(pts):
    """Scale rational points to integer coordinates (same extreme points)."""
    scale = 1
    for p in pts:
        for c in p:
            scale = math.lcm(scale, c.denominator)
    return [tuple(int(c * scale) for c in p) for p in pts]


def _probe_directions(n, count=24):
    # Fixed pseudo-random integer directions; determinism keeps hull_reduce pure.
    state = 0x9E3779B9
    dirs = []
    for j in range(n):
        for s in (1, -1):
            dirs.append(tuple(s if k == j else 0 for k in range(n)))
    for _ in range(count):
        d = []
        for _ in range(n):
            state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
            d.append((state >> 33) % 21 - 10)
        dirs.append(tuple(d))
    return dirs


def hull_reduce(points):
    """Return the polytope spanned by ``points``, keeping only extreme points."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise ValueError("cannot take the convex hull of an empty point set")
    n = len(pts[0])
    if n == 0:
        raise DimensionError("points must have positive dimension")
    if any(len(p) != n for p in pts):
        raise DimensionError("points of mixed dimension")
    if len(pts) <= 2:
        return Polytope._canonical(n, pts)
    if n == 1:
        return Polytope._canonical(1, [pts[0], pts[-1]])

    ipts = _integer_coords(pts)
    # A unique maximiser of any linear functional is extreme; so are the
    # lexicographic ends.
    known = {0, len(pts) - 1}
    for d in _probe_directions(n):
        vals = [sum(a * b for a, b in zip(d, p)) for p in ipts]
        top = max(vals)
        if vals.count(top) == 1:
            known.add(vals.index(top))

    vertex_cols = [ipts[i] for i in sorted(known)]
    keep = set(range(len(pts)))
    for i in range(len(pts)):
        if i in known:
            continue
        # Inside the hull of known vertices settles it cheaply; otherwise
        # test against every point still kept.
        if _in_hull(ipts[i], vertex_cols) or _in_hull(ipts[i], [ipts[j] for j in sorted(keep) if j != i]):
            keep.discard(i)
    return Polytope._canonical(n, [pts[i] for i in sorted(keep)])


def _check_dims(A, B):
    if A.dim != B.dim:
        raise DimensionError(f"dimension mismatch: {A.dim} vs {B.dim}")


def minkowski_odot(A, B):
    """Minkowski sum ``{a + b}``."""
    _check_dims(A, B)
    return hull_reduce([tuple(x + y for x, y in zip(a, b)) for a in A.vertices for b in B.vertices])


def hullunion_oplus(A, B):
    """Convex hull of ``A | B``."""
    _check_dims(A, B)
    return hull_reduce(A.vertices + B.vertices)


def support_function(A, x):
    """``max_v (v, x)`` over the vertices.

    Exact when ``x`` is rational (ints or Fractions); a float otherwise.
    """
    if len(x) != A.dim:
        raise DimensionError(f"point has dimension {len(x)}, polytope {A.dim}")
    if any(isinstance(c, float) for c in x):
        return max(_fdot(v, x) for v in A.vertices)
    return max(sum(vj * xj for vj, xj in zip(v, x)) for v in A.vertices)


def _fdot(v, x):
    return math.fsum(float(vj) * xj for vj, xj in zip(v, x))


def equals(A, B):
    _check_dims(A, B)
    return A.vertices == B.vertices


def contains_point(A, v):
    v = as_point(v)
    if len(v) != A.dim:
        raise DimensionError(f"point has dimension {len(v)}, polytope {A.dim}")
    if v in A.vertices:
        return True
    return _in_hull(v, list(A.vertices))


def _strict_rows(P, a):
    a = as_point(a)
    if a not in P.vertices:
        raise ValueError(f"{a} is not a vertex of {P!r}")
    return [tuple(ai - vi for ai, vi in zip(a, v)) for v in P.vertices if v != a]


def normal_cone_overlap(A, a, B, b):
    """Do the open normal cones of ``A`` at ``a`` and ``B`` at ``b`` meet?

    Decided as exact feasibility of ``(a - v, x) >= 1`` for the other
    vertices ``v`` of ``A`` together with ``(b - w, x) >= 1`` for the other
    vertices ``w`` of ``B``; cones are homogeneous, so the unit margin
    loses nothing.
    """
    _check_dims(A, B)
    rows = _strict_rows(A, a) + _strict_rows(B, b)
    if not rows:
        return True
    # x = xp - xm (free), minus one surplus per row: r.xp - r.xm - s = 1.
    m = len(rows)
    M = []
    for i, r in enumerate(rows):
        M.append(list(r) + [-c for c in r] + [-1 if k == i else 0 for k in range(m)])
    return is_feasible(M, [1] * m)


def newton_polytope(f):
    """Convex hull of the exponent vectors of a generalized polynomial."""
    return hull_reduce([t.exponent for t in f.terms])


def to_json(P):
    """Serialize to the ``polytope/1`` record (compact, canonical order)."""
    doc = {
        "schema": SCHEMA,
        "dim": P.dim,
        "vertices": [[str(c) for c in v] for v in P.vertices],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text):
    doc = json.loads(text) if isinstance(text, str) else text
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    dim = doc["dim"]
    verts = [as_point(v) for v in doc["vertices"]]
    if any(len(v) != dim for v in verts):
        raise DimensionError("vertex length does not match 'dim'")
    return hull_reduce(verts)

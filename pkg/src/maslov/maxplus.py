"""The max-plus semifield and its Maslov deformation.

Elements are :class:`MaxPlus` values.  ``+`` is the idempotent addition
(``max``) and ``*`` the multiplication (ordinary ``+``), following the usual
semiring operator convention.  The zero element is the tagged :data:`BOTTOM`,
never a float ``-inf`` sentinel, so the absorbing/neutral laws hold exactly.
"""

import math
from numbers import Real

__all__ = ["MaxPlus", "BOTTOM", "ONE", "oplus", "odot", "maslov_oplus_h"]


class MaxPlus:
    """An element of R u {-inf}.

    ``value`` is any finite real (int, Fraction, float) or ``None`` for the
    bottom element.  Finite values are stored as given, so exact number
    types stay exact under the semiring operations.
    """

    __slots__ = ("value",)

    def __init__(self, value=None):
        if value is not None:
            if isinstance(value, MaxPlus):
                value = value.value
            elif not isinstance(value, Real):
                raise TypeError(f"expected a real number, got {type(value).__name__}")
            elif isinstance(value, float) and math.isinf(value) and value < 0:
                value = None
            elif isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"{value!r} is not an element of R_max")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("MaxPlus is immutable")

    @property
    def is_bottom(self):
        return self.value is None

    def __float__(self):
        return -math.inf if self.value is None else float(self.value)

    def __add__(self, other):
        return oplus(self, _coerce(other))

    __radd__ = __add__

    def __mul__(self, other):
        return odot(self, _coerce(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Real):
            other = MaxPlus(other)
        if not isinstance(other, MaxPlus):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("MaxPlus", self.value))

    def __lt__(self, other):
        other = _coerce(other)
        if other.value is None:
            return False
        return self.value is None or self.value < other.value

    def __le__(self, other):
        return self == other or self < other

    def __repr__(self):
        return "MaxPlus(-inf)" if self.value is None else f"MaxPlus({self.value!r})"


def _coerce(x):
    return x if isinstance(x, MaxPlus) else MaxPlus(x)


BOTTOM = MaxPlus(None)
ONE = MaxPlus(0)


def oplus(u, v):
    """Idempotent addition: ``max(u, v)``."""
    u, v = _coerce(u), _coerce(v)
    if u.value is None:
        return v
    if v.value is None:
        return u
    return u if u.value >= v.value else v


def odot(u, v):
    """Multiplication: ``u + v`` with bottom absorbing."""
    u, v = _coerce(u), _coerce(v)
    if u.value is None or v.value is None:
        return BOTTOM
    return MaxPlus(u.value + v.value)


def maslov_oplus_h(u, v, h):
    """Deformed addition ``h*log(exp(u/h) + exp(v/h))`` as a float.

    Evaluated as ``max(u, v) + h*log1p(exp(-|u - v|/h))`` so nothing
    overflows however small ``h`` is.  Bottom is neutral.
    """
    h = float(h)
    if not h > 0:
        raise ValueError(f"h must be positive, got {h!r}")
    u, v = _coerce(u), _coerce(v)
    if u.value is None:
        return float(v)
    if v.value is None:
        return float(u)
    a, b = float(u.value), float(v.value)
    hi, gap = max(a, b), abs(a - b)
    return hi + h * math.log1p(math.exp(-gap / h))

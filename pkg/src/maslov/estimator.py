"""Scikit-learn style transformer for the dequantization transform.

Each configured polynomial ``f`` becomes one output feature: the limit
``f_hat(x)`` (a tropical, piecewise-linear feature) or, with ``h`` set, the
smooth deformation ``h*log|f(exp(x/h))|``.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .dequant import dequantize_numeric, dequantize_symbolic
from .genpoly import GeneralizedPolynomial, parse
from .polytope import newton_polytope


class DequantizationTransformer(TransformerMixin, BaseEstimator):
    """Map points of R^n to dequantized polynomial values.

    Parameters
    ----------
    polynomials : str, GeneralizedPolynomial or list of these
        Polynomials in ``x1..xn``; ``n`` is taken from the data at fit time.
    h : float or None
        ``None`` gives the exact limit ``max_d (d, x)``; a positive value
        gives ``h*log|f(exp(x/h))|`` instead.
    """

    def __init__(self, polynomials="x1", h=None):
        self.polynomials = polynomials
        self.h = h

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=1)
        self.n_features_in_ = X.shape[1]
        if self.h is not None and not self.h > 0:
            raise ValueError(f"h must be positive or None, got {self.h!r}")
        specs = [self.polynomials] if isinstance(self.polynomials, (str, GeneralizedPolynomial)) else self.polynomials
        polys = []
        for spec in specs:
            f = spec if isinstance(spec, GeneralizedPolynomial) else parse(spec, self.n_features_in_)
            if f.dim != self.n_features_in_:
                raise ValueError(f"polynomial has dimension {f.dim}, data has {self.n_features_in_} features")
            polys.append(f)
        if not polys:
            raise ValueError("no polynomials given")
        self.polynomials_ = polys
        self.newton_polytopes_ = [newton_polytope(f) for f in polys]
        self.dequantizations_ = [dequantize_symbolic(f) for f in polys]
        self._vertices = [np.array([[float(c) for c in v] for v in P.vertices]) for P in self.newton_polytopes_]
        return self

    def transform(self, X):
        check_is_fitted(self, "polynomials_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        if self.h is None:
            return np.column_stack([(X @ V.T).max(axis=1) for V in self._vertices])
        out = np.empty((X.shape[0], len(self.polynomials_)))
        for j, f in enumerate(self.polynomials_):
            for i, x in enumerate(X):
                out[i, j] = dequantize_numeric(f, tuple(x), self.h)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "polynomials_")
        return np.array([f"deq({f})" for f in self.polynomials_], dtype=object)

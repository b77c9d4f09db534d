"""Law checks relating polynomials, their dequantizations and Newton sets.

Each check returns a :class:`LawResult` whose status is PASS, FAIL or
SKIPPED.  SKIPPED means the law's hypothesis does not hold for the input,
so a mismatch there is expected and is reported as a witness, not a
failure.
"""

from dataclasses import dataclass
from typing import Optional

from .dequant import dequantize_symbolic, general_position_by_sampling, in_general_position
from .errors import ZeroPolynomialError
from .genpoly import has_nonnegative_coefficients, render
from .polytope import hullunion_oplus, minkowski_odot, newton_polytope
from .sampling import random_polynomial
from .sublinear import subdifferential, support_of

__all__ = ["LawResult", "PASS", "FAIL", "SKIPPED", "check_pair", "check_random", "format_results"]

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
SCALE = complex(-2, 3)


@dataclass
class LawResult:
    name: str
    status: str
    detail: str = ""
    witness: Optional[str] = None


def _law(name, ok, detail, witness=None):
    return LawResult(name, PASS if ok else FAIL, detail, None if ok else witness)


def _fmt(P):
    verts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" if len(v) > 1 else str(v[0]) for v in P.vertices)
    return "{" + verts + "}"


def check_pair(f, g, samples=1000, seed=42):
    """Run every applicable law on the pair ``(f, g)``."""
    results = []
    Nf, Ng = newton_polytope(f), newton_polytope(g)
    pf, pg = dequantize_symbolic(f), dequantize_symbolic(g)

    fg = f * g
    lhs, rhs = dequantize_symbolic(fg), pf.odot(pg)
    results.append(_law("dequant_product", lhs == rhs, "deq(fg) = deq(f) + deq(g)", f"{lhs!r} != {rhs!r}"))
    Nfg, prod = newton_polytope(fg), minkowski_odot(Nf, Ng)
    results.append(_law("newton_product", Nfg == prod, "N(fg) = N(f) (.) N(g)", f"{_fmt(Nfg)} != {_fmt(prod)}"))

    scaled = dequantize_symbolic(f * SCALE)
    results.append(_law("scale_invariance", scaled == pf, "deq(c f) = deq(f)", f"{scaled!r} != {pf!r}"))

    exact = in_general_position(f, g)
    sampled = general_position_by_sampling(f, g, samples=samples, seed=seed)
    results.append(
        _law(
            "general_position",
            exact == sampled,
            f"general_position={str(exact).lower()} (sampling {'agrees' if exact == sampled else 'disagrees'})",
            f"exact={exact}, sampled={sampled} over {samples} points",
        )
    )

    nonneg = has_nonnegative_coefficients(f) and has_nonnegative_coefficients(g)
    union = hullunion_oplus(Nf, Ng)
    try:
        s = f + g
    except ZeroPolynomialError:
        s = None
    if s is None:
        for name in ("dequant_sum", "newton_sum"):
            results.append(LawResult(name, SKIPPED, "f+g is the zero polynomial"))
    else:
        Ns = newton_polytope(s)
        if nonneg or exact:
            why = "nonnegative coefficients" if nonneg else "general position"
            lhs, rhs = dequantize_symbolic(s), pf.oplus(pg)
            results.append(
                _law("dequant_sum", lhs == rhs, f"deq(f+g) = max(deq f, deq g) [{why}]", f"{lhs!r} != {rhs!r}")
            )
            results.append(
                _law("newton_sum", Ns == union, f"N(f+g) = N(f) (+) N(g) [{why}]", f"{_fmt(Ns)} != {_fmt(union)}")
            )
        else:
            hypothesis = "hypothesis violated: neither nonnegative coefficients nor general position"
            witness = None if Ns == union else f"N(f+g) = {_fmt(Ns)} != {_fmt(union)} = N(f) (+) N(g)"
            results.append(LawResult("dequant_sum", SKIPPED, hypothesis))
            results.append(LawResult("newton_sum", SKIPPED, hypothesis, witness))

    round_trip = all(subdifferential(support_of(P)) == P for P in (Nf, Ng)) and all(
        support_of(subdifferential(p)) == p for p in (pf, pg)
    )
    results.append(_law("duality", round_trip, "subdiff(support(P)) = P", "round trip changed a polytope"))
    lhs, rhs = subdifferential(pf.odot(pg)), minkowski_odot(subdifferential(pf), subdifferential(pg))
    results.append(_law("subdiff_odot", lhs == rhs, "subdiff(p+q) = subdiff p (.) subdiff q", f"{_fmt(lhs)} != {_fmt(rhs)}"))
    lhs, rhs = subdifferential(pf.oplus(pg)), hullunion_oplus(subdifferential(pf), subdifferential(pg))
    results.append(
        _law("subdiff_oplus", lhs == rhs, "subdiff(max(p,q)) = subdiff p (+) subdiff q", f"{_fmt(lhs)} != {_fmt(rhs)}")
    )
    return results


def check_random(rng, count, dim=None, nonneg=False, samples=1000, seed=42):
    """Yield ``(index, f, g, results)`` for ``count`` random pairs."""
    for i in range(count):
        d = dim if dim is not None else int(rng.integers(1, 4))
        f = random_polynomial(rng, d, nonneg=nonneg)
        g = random_polynomial(rng, d, nonneg=nonneg)
        yield i, f, g, check_pair(f, g, samples=samples, seed=seed)


def format_results(results, indent=""):
    lines = []
    for r in results:
        line = f"{indent}{r.status:<7} {r.name}: {r.detail}"
        lines.append(line)
        if r.witness:
            lines.append(f"{indent}        witness: {r.witness}")
    return lines


def describe_pair(f, g):
    return [f"f = {render(f)}", f"g = {render(g)}"]

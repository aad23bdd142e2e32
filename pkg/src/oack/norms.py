"""The four norms on R^k and the diameter seminorm.

Functions (elements of C(K)) carry the sup norm and the d-norm
``||x||_d = ||x+||_inf + ||x-||_inf``; measures carry the variation norm and
``||mu||_0 = max(||mu+||_1, ||mu-||_1)``.  Where two closed forms exist both
are evaluated and compared, so a disagreement surfaces immediately as
:class:`~oack.core.TheoremViolation`.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    FUNCTION,
    MEASURE,
    LatticeVector,
    PreconditionError,
    TheoremViolation,
    jordan_decompose,
    total_mass,
)
from .polytope import FUNCTION_NORMS, ball_hrep, enumerate_vertices

ZERO = Fraction(0)


def _require(v: LatticeVector, role: str, op: str) -> None:
    if v.role != role:
        raise PreconditionError(f"{op} expects a {role}, got a {v.role}")


def sup_norm(x: LatticeVector) -> Fraction:
    _require(x, FUNCTION, "sup_norm")
    return max(abs(c) for c in x)


def _half_diameter_by_recentering(x: LatticeVector) -> Fraction:
    # min over alpha of max_i |x_i - alpha|; the optimum sits at a midpoint
    candidates = {(a + b) / 2 for a in x for b in x}
    return min(max(abs(c - alpha) for c in x) for alpha in candidates)


def diameter(x: LatticeVector) -> Fraction:
    """rho(x) = max_{i,j} (x_i - x_j).  Vanishes exactly on constants."""
    _require(x, FUNCTION, "diameter")
    rho = max(x) - min(x)
    other = 2 * _half_diameter_by_recentering(x)
    if rho != other:
        raise TheoremViolation(f"diameter formulas disagree on {x}: {rho} vs {other}")
    return rho


def d_norm(x: LatticeVector) -> Fraction:
    _require(x, FUNCTION, "d_norm")
    pos, neg = jordan_decompose(x)
    by_parts = max(pos) + max(neg)
    by_max = max(sup_norm(x), diameter(x))
    if by_parts != by_max:
        raise TheoremViolation(f"d-norm formulas disagree on {x}: {by_parts} vs {by_max}")
    return by_parts


def var_norm(mu: LatticeVector) -> Fraction:
    _require(mu, MEASURE, "var_norm")
    pos, neg = jordan_decompose(mu)
    return sum(pos.coords, ZERO) + sum(neg.coords, ZERO)


def zero_norm(mu: LatticeVector) -> Fraction:
    """max(||mu+||_1, ||mu-||_1), cross-checked against (||mu||_1 + |mu(K)|) / 2."""
    _require(mu, MEASURE, "zero_norm")
    pos, neg = jordan_decompose(mu)
    by_max = max(sum(pos.coords, ZERO), sum(neg.coords, ZERO))
    by_mass = (var_norm(mu) + abs(total_mass(mu))) / 2
    if by_max != by_mass:
        raise TheoremViolation(f"zero-norm formulas disagree on {mu}: {by_max} vs {by_mass}")
    return by_max


def norm(v: LatticeVector, which: str) -> Fraction:
    """Dispatch by norm name: sup, d, var or zero."""
    try:
        fn = {"sup": sup_norm, "d": d_norm, "var": var_norm, "zero": zero_norm}[which]
    except KeyError:
        raise ValueError(f"unknown norm {which!r}") from None
    return fn(v)


def dual_norm_oracle(mu: LatticeVector, primal: str = "d") -> Fraction:
    """Dual norm of ``mu`` against the ``primal`` ball, by scanning its vertices.

    Independent of the closed forms above: the vertices come from
    enumerating the ball's H-representation.
    """
    _require(mu, MEASURE, "dual_norm_oracle")
    if primal not in FUNCTION_NORMS:
        raise ValueError(f"primal norm must be one of {FUNCTION_NORMS}, got {primal!r}")
    vertices = enumerate_vertices(ball_hrep(primal, mu.k))
    return max(abs(mu.dot(v)) for v in vertices)

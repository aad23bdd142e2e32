"""Norming faces, smoothness of the d-norm, and exposed points of B_0.

At finite dimension the weak* and norm topologies agree, so "weak* exposed"
is just "exposed".  Every point of a discrete K is isolated, and the
sequence conditions separating Frechet from Gateaux differentiability
reduce to "the maximiser is unique", so the two notions coincide here.
A finite K is trivially first countable, so every extreme point of B_0 is
strongly exposed; the peaking constructions below produce the witnesses.
:func:`is_frechet` still computes its answer through its own criterion
rather than calling :func:`is_gateaux`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    FUNCTION,
    MEASURE,
    LatticeVector,
    PreconditionError,
    TheoremViolation,
    delta,
    vector,
)
from .norms import d_norm, diameter, sup_norm
from .oapoly import OAPoly, is_odd
from .polytope import predicted_extremes

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class NormingFace:
    x: LatticeVector
    extremes: tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.extremes)


def _require_unit(x: LatticeVector, op: str) -> None:
    if x.role != FUNCTION:
        raise PreconditionError(f"{op} expects a function")
    if d_norm(x) != 1:
        raise PreconditionError(f"{op} needs ||x||_d = 1, got {d_norm(x)}")


def norming_face(x: LatticeVector) -> NormingFace:
    """Extreme points mu of B_0 with <mu, x> = 1."""
    _require_unit(x, "norming_face")
    members = tuple(mu for mu in predicted_extremes("zero", x.k) if mu.dot(x) == 1)
    if not members:
        raise TheoremViolation(f"no extreme point norms {x}")
    return NormingFace(x, members)


def _closed_form_derivative(x: LatticeVector) -> Optional[LatticeVector]:
    """Derivative predicted by the point and pair criteria, or None.

    delta_t:          t is the unique point with x(t) = 1, and diam(x) < 1
    -delta_t:         same for -x
    delta_t - delta_s: (t, s) is the unique pair with x(t) - x(s) = 1, and ||x||_inf < 1
    """
    k = x.k
    hits: list[LatticeVector] = []
    if diameter(x) < 1:
        for sgn in (1, -1):
            points = [t for t in range(k) if sgn * x[t] == 1]
            if len(points) == 1:
                hits.append(delta(k, points[0]).scale(sgn))
    if sup_norm(x) < 1:
        pairs = [(t, s) for t in range(k) for s in range(k) if t != s and x[t] - x[s] == 1]
        if len(pairs) == 1:
            t, s = pairs[0]
            hits.append(delta(k, t) - delta(k, s))
    return hits[0] if len(hits) == 1 else None


def is_gateaux(x: LatticeVector) -> tuple[bool, Optional[LatticeVector]]:
    """Gateaux smoothness of ||.||_d at x: the norming face is a singleton."""
    face = norming_face(x)
    derivative = face.extremes[0] if len(face) == 1 else None
    predicted = _closed_form_derivative(x)
    if predicted != derivative:
        raise TheoremViolation(
            f"norming face {face.extremes} disagrees with closed-form criterion {predicted} at {x}"
        )
    return derivative is not None, derivative


def is_frechet(x: LatticeVector) -> tuple[bool, Optional[LatticeVector]]:
    """Frechet smoothness via the sequence criterion, with sequences made finite.

    "Every sequence t_n with x(t_n) -> 1 is eventually t" becomes "no other
    point u has x(u) = 1", because constant sequences are the only ones that
    matter on a finite set.  Likewise for pairs.
    """
    _require_unit(x, "is_frechet")
    k = x.k
    candidates: list[LatticeVector] = []
    for sgn in (1, -1):
        for t in range(k):
            if sgn * x[t] == 1 and diameter(x) < 1:
                eventually_t = all(sgn * x[u] != 1 for u in range(k) if u != t)
                if eventually_t:
                    candidates.append(delta(k, t).scale(sgn))
    for t in range(k):
        for s in range(k):
            if t != s and x[t] - x[s] == 1 and sup_norm(x) < 1:
                eventually_ts = all(
                    x[u] - x[v] != 1
                    for u in range(k)
                    for v in range(k)
                    if u != v and (u, v) != (t, s)
                )
                if eventually_ts:
                    candidates.append(delta(k, t) - delta(k, s))
    if len(candidates) == 1:
        return True, candidates[0]
    return False, None


def _require_extreme(mu: LatticeVector) -> None:
    if mu.role != MEASURE:
        raise PreconditionError("target must be a measure")
    if mu.coords not in predicted_extremes("zero", mu.k).as_set():
        raise PreconditionError(f"{mu} is not an extreme point of B_0")


def exposes(x: LatticeVector, mu: LatticeVector) -> bool:
    """<mu, x> = 1 and <nu, x> < 1 for every other extreme point nu."""
    _require_unit(x, "exposes")
    _require_extreme(mu)
    if mu.dot(x) != 1:
        return False
    return all(nu.dot(x) < 1 for nu in predicted_extremes("zero", x.k) if nu != mu)


def strongly_exposes(x: LatticeVector, mu: LatticeVector) -> bool:
    """Strong exposure, decided through Frechet differentiability at x.

    On a polytopal ball this coincides with :func:`exposes`; the two are
    compared and a mismatch raises.
    """
    _require_extreme(mu)
    flag, derivative = is_frechet(x)
    strong = flag and derivative == mu
    if strong != exposes(x, mu):
        raise TheoremViolation(f"exposed and strongly exposed differ at x={x}, mu={mu}")
    return strong


def peaking_function(k: int, t: int) -> LatticeVector:
    """x(t) = 1 and x(u) = 1/2 elsewhere; strongly exposes delta_t."""
    if not 0 <= t < k:
        raise IndexError(f"point {t} outside K = {{0..{k - 1}}}")
    x = vector((1 if u == t else HALF for u in range(k)), FUNCTION)
    if not strongly_exposes(x, delta(k, t)):
        raise TheoremViolation(f"peaking function fails to expose delta_{t}")
    return x


def pair_peaking(k: int, t: int, s: int) -> LatticeVector:
    """x(t) = 1/2, x(s) = -1/2, 0 elsewhere; strongly exposes delta_t - delta_s."""
    if not (0 <= t < k and 0 <= s < k):
        raise IndexError(f"points ({t}, {s}) outside K = {{0..{k - 1}}}")
    if t == s:
        raise ValueError("pair_peaking needs distinct points")
    x = vector((HALF if u == t else -HALF if u == s else 0 for u in range(k)), FUNCTION)
    if not strongly_exposes(x, delta(k, t) - delta(k, s)):
        raise TheoremViolation(f"pair peaking function fails to expose delta_{t} - delta_{s}")
    return x


def exposing_witness(mu: LatticeVector) -> LatticeVector:
    """A unit vector strongly exposing the extreme point ``mu`` of B_0."""
    _require_extreme(mu)
    k = mu.k
    support = sorted(mu.support())
    if len(support) == 1:
        t = support[0]
        x = peaking_function(k, t)
        return x if mu[t] > 0 else -x
    t = next(i for i in support if mu[i] > 0)
    s = next(i for i in support if mu[i] < 0)
    return pair_peaking(k, t, s)


def poly_exposing_witness(P: OAPoly) -> LatticeVector:
    """Witness for +-delta_t^n or delta_t^n - delta_s^n in the sup-norm ball, n even."""
    if is_odd(P.degree):
        raise PreconditionError("exposed points of the polynomial ball are handled for even n")
    return exposing_witness(P.mu)

"""Orthogonally additive n-homogeneous polynomials on C(K), K finite.

Every such polynomial is ``P(x) = sum_i mu_i x_i**n`` for a unique measure
mu, so :class:`OAPoly` simply stores ``(degree, mu)``.  The parity of the
degree decides which norm on measures the supremum norm corresponds to,
and every norm path below branches on it explicitly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Optional, Sequence

from .core import (
    MEASURE,
    DimensionError,
    LatticeVector,
    PreconditionError,
    TheoremViolation,
    check_cap,
    delta,
    jordan_decompose,
    lattice_abs,
    vector,
)
from .norms import var_norm, zero_norm

ZERO = Fraction(0)


def is_odd(n: int) -> bool:
    return n % 2 == 1


def parity(n: int) -> str:
    return "odd" if is_odd(n) else "even"


@dataclass(frozen=True)
class OAPoly:
    degree: int
    mu: LatticeVector

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"degree must be a positive integer, got {self.degree!r}")
        if self.mu.role != MEASURE:
            object.__setattr__(self, "mu", self.mu.as_role(MEASURE))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, degree: int) -> OAPoly:
        return cls(degree, vector(coeffs, MEASURE))

    @classmethod
    def point_power(cls, k: int, t: int, degree: int) -> OAPoly:
        """delta_t^n : x -> x_t**n."""
        return cls(degree, delta(k, t))

    @property
    def k(self) -> int:
        return self.mu.k

    @property
    def space(self):
        return self.mu.space

    def __call__(self, x: LatticeVector) -> Fraction:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"degree": self.degree, "mu": self.mu.to_json()}


def evaluate(P: OAPoly, x: LatticeVector) -> Fraction:
    if x.k != P.k:
        raise DimensionError(f"dimension mismatch: polynomial on R^{P.k}, vector in R^{x.k}")
    n = P.degree
    return sum((m * c**n for m, c in zip(P.mu, x)), ZERO)


def abs_poly(P: OAPoly) -> OAPoly:
    """|P|, represented by the measure |mu|."""
    return OAPoly(P.degree, lattice_abs(P.mu))


def _require_nonnegative(x: LatticeVector, op: str) -> None:
    if not x.is_nonnegative():
        raise PreconditionError(f"{op} requires x >= 0, got {x}")


def abs_eval(P: OAPoly, x: LatticeVector) -> Fraction:
    _require_nonnegative(x, "abs_eval")
    return evaluate(abs_poly(P), x)


def multilinear(P: OAPoly, *args: LatticeVector) -> Fraction:
    """The symmetric n-linear form A with A(x, ..., x) = P(x): sum_i mu_i prod_m x^m_i."""
    if len(args) != P.degree:
        raise ValueError(f"expected {P.degree} arguments, got {len(args)}")
    total = ZERO
    for i, m in enumerate(P.mu):
        if m == 0:
            continue
        term = m
        for u in args:
            term *= u[i]
        total += term
    return total


def partition_value(P: OAPoly, partitions: Sequence[Sequence[LatticeVector]]) -> Fraction:
    """sum over i_1..i_n of |A(u^1_{i_1}, ..., u^n_{i_n})| for one choice of partitions."""
    if len(partitions) != P.degree:
        raise ValueError("need one partition per argument slot")
    return sum(
        (abs(multilinear(P, *pieces)) for pieces in product(*partitions)),
        ZERO,
    )


def atomic_partition(x: LatticeVector) -> list[LatticeVector]:
    k = x.k
    return [
        vector((x[i] if j == i else 0 for j in range(k)), x.role)
        for i in range(k)
        if x[i] != 0
    ] or [x]


def _random_refinement(x: LatticeVector, rng: random.Random, pieces: int) -> list[LatticeVector]:
    # split every coordinate into `pieces` nonnegative rational shares
    shares = []
    for c in x:
        cuts = sorted(Fraction(rng.randint(0, 12), 12) for _ in range(pieces - 1))
        bounds = [ZERO, *cuts, Fraction(1)]
        shares.append([c * (hi - lo) for lo, hi in zip(bounds, bounds[1:])])
    return [vector((shares[i][p] for i in range(x.k)), x.role) for p in range(pieces)]


def partition_oracle(
    P: OAPoly,
    x: LatticeVector,
    budget: int = 32,
    seed: int = 0,
    include_atomic: bool = True,
) -> Fraction:
    """Best value of the partition formula for |P|(x) over a bounded search.

    Candidates are the trivial partition {x}, the coordinate-atomic partition
    (when ``include_atomic``), and ``budget`` random refinements mixed across
    slots.  The search is not exhaustive, so the result is a lower bound for
    |P|(x); with the atomic partition included it equals |P|(x).
    """
    _require_nonnegative(x, "partition_oracle")
    n = P.degree
    rng = random.Random(seed)
    pool: list[list[LatticeVector]] = [[x]]
    if include_atomic:
        pool.append(atomic_partition(x))
    best = partition_value(P, [[x]] * n)
    if include_atomic:
        best = max(best, partition_value(P, [atomic_partition(x)] * n))
    # keep the product of partition sizes small: at most 3 pieces per slot
    for _ in range(budget):
        pool.append(_random_refinement(x, rng, rng.randint(2, 3)))
        slots = [pool[rng.randrange(len(pool))] for _ in range(n)]
        best = max(best, partition_value(P, slots))
    return best


def reg_norm_poly(P: OAPoly) -> Fraction:
    """Regular norm ||P||_r = ||mu||_1 for every degree."""
    return var_norm(P.mu)


def sup_norm_poly(P: OAPoly) -> Fraction:
    """Supremum of |P| on the sup-norm unit ball, from the representing measure."""
    if is_odd(P.degree):
        return var_norm(P.mu)
    return zero_norm(P.mu)


def sup_norm_bruteforce(P: OAPoly) -> Fraction:
    """max |P(x)| over ||x||_inf <= 1, without using either closed form.

    Substituting t_i = x_i**n turns P into the linear functional mu . t over
    the box [-1, 1]^k (n odd) or [0, 1]^k (n even), whose maximum sits at a
    box vertex.
    """
    check_cap(P.k, "sup_norm_bruteforce")
    levels = (-1, 1) if is_odd(P.degree) else (0, 1)
    return max(
        abs(sum((m * t for m, t in zip(P.mu, pattern)), ZERO))
        for pattern in product(levels, repeat=P.k)
    )


def local_sup(P: OAPoly, x: LatticeVector) -> Fraction:
    """sup{|P(y)| : |y| <= x} for x >= 0."""
    _require_nonnegative(x, "local_sup")
    n = P.degree
    powers = [c**n for c in x]
    if is_odd(n):
        return sum((abs(m) * p for m, p in zip(P.mu, powers)), ZERO)
    pos, neg = jordan_decompose(P.mu)
    return max(
        sum((m * p for m, p in zip(pos, powers)), ZERO),
        sum((m * p for m, p in zip(neg, powers)), ZERO),
    )


@dataclass(frozen=True)
class BasicReport:
    abs_value: Fraction
    local_sup: Fraction
    ratio: Optional[Fraction]
    parity: str

    def to_json(self) -> dict:
        return {
            "abs_value": str(self.abs_value),
            "local_sup": str(self.local_sup),
            "ratio": None if self.ratio is None else str(self.ratio),
            "parity": self.parity,
        }


def check_basic(P: OAPoly, x: LatticeVector) -> BasicReport:
    """Compare |P|(x) with the local supremum; equal for odd n, within 2 for even n."""
    value = abs_eval(P, x)
    bound = local_sup(P, x)
    if is_odd(P.degree):
        if value != bound:
            raise TheoremViolation(f"odd degree: |P|(x) = {value} but local sup = {bound}")
    elif value > 2 * bound:
        raise TheoremViolation(f"even degree: |P|(x) = {value} exceeds 2 * {bound}")
    ratio = value / bound if bound != 0 else None
    return BasicReport(value, bound, ratio, parity(P.degree))


def _disjoint_grid(k: int):
    values = (Fraction(1), Fraction(-2), Fraction(1, 2))
    idx = range(k)
    for r in range(1, k):
        for S in combinations(idx, r):
            rest = [i for i in idx if i not in S]
            for r2 in range(1, len(rest) + 1):
                for T in combinations(rest, r2):
                    for a, b in product(values, repeat=2):
                        u = [a if i in S else ZERO for i in idx]
                        v = [b if i in T else ZERO for i in idx]
                        yield u, v


def is_orthogonally_additive_eval(
    evaluator: Callable[[LatticeVector], Fraction],
    k: int,
    trials: int = 50,
    seed: int = 0,
) -> bool:
    """Black-box test of P(u + v) = P(u) + P(v) for disjoint u, v.

    A deterministic grid over all disjoint support pairs is tried first, then
    ``trials`` random disjoint pairs.  Returns False at the first failure.
    """

    def ok(u, v) -> bool:
        u, v = vector(u), vector(v)
        return evaluator(u + v) == evaluator(u) + evaluator(v)

    for u, v in _disjoint_grid(k):
        if not ok(u, v):
            return False
    rng = random.Random(seed)
    for _ in range(trials):
        labels = [rng.randrange(3) for _ in range(k)]
        u = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if lab == 1 else ZERO for lab in labels]
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if lab == 2 else ZERO for lab in labels]
        if not ok(u, v):
            return False
    return True

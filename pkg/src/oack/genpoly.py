"""General n-homogeneous polynomials as sparse multi-index tables.

``SymPoly`` stores ``P(x) = sum_alpha c_alpha x**alpha`` with exponent
vectors alpha of total degree n.  The symmetric n-linear form A is never
stored; :func:`polarize` recovers it from P by the signed average over
sign patterns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Mapping, Sequence

from .core import (
    DimensionError,
    LatticeVector,
    OackError,
    TheoremViolation,
    to_rational,
    vector,
    zeros,
)
from .oapoly import OAPoly, is_orthogonally_additive_eval

ZERO = Fraction(0)

Alpha = tuple[int, ...]


def _multinomial(alpha: Alpha) -> int:
    out = factorial(sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


@dataclass(frozen=True, eq=False)
class SymPoly:
    degree: int
    k: int
    coeffs: Mapping[Alpha, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1 or self.k < 1:
            raise ValueError("need degree >= 1 and k >= 1")
        clean: dict[Alpha, Fraction] = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.k or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for k={self.k}")
            if sum(alpha) != self.degree:
                raise ValueError(f"multi-index {alpha} does not have degree {self.degree}")
            c = to_rational(c)
            if c != 0:
                clean[alpha] = clean.get(alpha, ZERO) + c
        object.__setattr__(self, "coeffs", {a: c for a, c in sorted(clean.items()) if c != 0})

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.degree, self.k, self.coeffs) == (other.degree, other.k, other.coeffs)

    def __call__(self, x: LatticeVector) -> Fraction:
        return evaluate(self, x)

    def is_diagonal(self) -> bool:
        return all(sum(1 for a in alpha if a) <= 1 for alpha in self.coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.degree,
            "k": self.k,
            "coeffs": [{"alpha": list(a), "c": str(c)} for a, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymPoly:
        coeffs: dict[Alpha, Fraction] = {}
        for entry in data["coeffs"]:
            alpha = tuple(entry["alpha"])
            coeffs[alpha] = coeffs.get(alpha, ZERO) + to_rational(entry["c"])
        return cls(int(data["n"]), int(data["k"]), coeffs)

    @classmethod
    def from_oapoly(cls, P: OAPoly) -> SymPoly:
        n, k = P.degree, P.k
        coeffs = {}
        for i, m in enumerate(P.mu):
            alpha = tuple(n if j == i else 0 for j in range(k))
            coeffs[alpha] = m
        return cls(n, k, coeffs)


def evaluate(P: SymPoly, x: LatticeVector) -> Fraction:
    if x.k != P.k:
        raise DimensionError(f"dimension mismatch: {P.k} vs {x.k}")
    total = ZERO
    for alpha, c in P.coeffs.items():
        term = c
        for xi, a in zip(x, alpha):
            if a:
                term *= xi**a
        total += term
    return total


def polarize(P: SymPoly, *xs: LatticeVector) -> Fraction:
    """A(x_1, ..., x_n) = (1 / (2^n n!)) sum_eps eps_1...eps_n P(sum_i eps_i x_i)."""
    n = P.degree
    if len(xs) != n:
        raise OackError(f"polarize: degree {n} needs {n} arguments, got {len(xs)}")
    for x in xs:
        if x.k != P.k:
            raise DimensionError(f"dimension mismatch: {P.k} vs {x.k}")
    total = ZERO
    for eps in product((1, -1), repeat=n):
        point = zeros(P.k)
        sign = 1
        for e, x in zip(eps, xs):
            point = point + (x if e == 1 else -x)
            sign *= e
        total += sign * evaluate(P, point)
    return total / (2**n * factorial(n))


def _basis(k: int, i: int) -> LatticeVector:
    return vector(int(j == i) for j in range(k))


def is_orthogonally_additive(P: SymPoly) -> bool:
    """True iff P has no cross terms (every monomial lives on one variable)."""
    return P.is_diagonal()


def is_orthosymmetric(P: SymPoly) -> bool:
    """True iff A vanishes whenever two of its arguments are disjoint.

    By multilinearity it is enough to check A on tuples of standard basis
    vectors that use at least two distinct indices, and by symmetry one
    sorted tuple per multiset suffices.
    """
    basis = [_basis(P.k, i) for i in range(P.k)]
    answer = True
    for idx in combinations_with_replacement(range(P.k), P.degree):
        if len(set(idx)) < 2:
            continue
        if polarize(P, *(basis[i] for i in idx)) != 0:
            answer = False
            break
    if answer != is_orthogonally_additive(P):
        raise TheoremViolation(f"orthosymmetry and orthogonal additivity disagree for {P.to_json()}")
    return answer


def is_orthogonally_additive_blackbox(P: SymPoly, trials: int = 50, seed: int = 0) -> bool:
    return is_orthogonally_additive_eval(lambda x: evaluate(P, x), P.k, trials=trials, seed=seed)


def power_of_functional(phi: LatticeVector, n: int) -> SymPoly:
    """The polynomial x -> (phi . x)^n, expanded by the multinomial theorem."""
    k = phi.k
    coeffs = {}
    for idx in combinations_with_replacement(range(k), n):
        alpha = tuple(idx.count(i) for i in range(k))
        c = Fraction(_multinomial(alpha))
        for i, a in enumerate(alpha):
            c *= phi[i] ** a
        coeffs[alpha] = c
    return SymPoly(n, k, coeffs)


def power_functional_test(phi: LatticeVector, n: int) -> tuple[bool, bool]:
    """(phi^n orthogonally additive, phi or -phi a lattice homomorphism).

    On R^k a lattice homomorphism is a nonnegative multiple of a coordinate
    evaluation, so the second flag is ``|support(phi)| <= 1``.
    """
    if n < 2:
        raise ValueError("power_functional_test needs n >= 2")
    oa = is_orthogonally_additive(power_of_functional(phi, n))
    latticehom = len(phi.support()) <= 1
    if oa != latticehom:
        raise TheoremViolation(f"phi^n additivity ({oa}) vs lattice homomorphism ({latticehom}) for {phi}")
    return oa, latticehom


@dataclass(frozen=True)
class AtomReport:
    has_atom: bool
    witness: OAPoly
    witness_sup_norm: Fraction


def al_atom_check(weights: Sequence, n: int) -> AtomReport:
    """Finite weighted l1 space ||x|| = sum w_i |x_i|: every coordinate is an atom.

    The witness is the diagonal monomial x_0^n.  Its sup norm over the unit
    ball is max_j |a_j| / w_j^n, attained at a vertex +-e_j / w_j.  A
    nonatomic AL-space has no finite-dimensional instance, so the answer is
    always True here.
    """
    if not weights:
        raise ValueError("al_atom_check needs at least one weight")
    w = [to_rational(x) for x in weights]
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    if n < 2:
        raise ValueError("al_atom_check needs n >= 2")
    k = len(w)
    witness = OAPoly.point_power(k, 0, n)
    norm = max(abs(a) / wj**n for a, wj in zip(witness.mu, w))
    return AtomReport(True, witness, norm)

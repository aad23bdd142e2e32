"""Exact scalars and finite lattice vectors.

K is the discrete space {0, ..., k-1}, so C(K) and M(K) are both R^k.  A
:class:`LatticeVector` carries a role tag ("function" or "measure") that is
purely semantic; both roles share one representation.

Scalars are :class:`fractions.Fraction` throughout.  Nothing in this package
touches floating point outside of plotting.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

FUNCTION = "function"
MEASURE = "measure"
ROLES = (FUNCTION, MEASURE)

Rational = Fraction

CAP_ENV = "OACK_ENUM_CAP"
DEFAULT_CAP = 6


class OackError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(OackError, ValueError):
    pass


class PreconditionError(OackError, ValueError):
    pass


class CapacityError(OackError):
    """An exhaustive enumeration was asked to go beyond the configured cap."""


class TheoremViolation(OackError, AssertionError):
    """Two routes to the same exact quantity disagreed.

    Never expected in practice; raising it means an arithmetic bug.
    """


def enumeration_cap() -> int:
    """Largest k for exhaustive enumerations (override with ``OACK_ENUM_CAP``)."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise OackError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise OackError(f"{CAP_ENV} must be positive, got {cap}")
    return cap


def check_cap(k: int, what: str) -> None:
    cap = enumeration_cap()
    if k > cap:
        raise CapacityError(f"{what}: k={k} exceeds enumeration cap {cap} (set {CAP_ENV})")


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings.  Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {value!r}") from None
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Space:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"a space needs k >= 1 points, got {self.k!r}")

    def points(self) -> range:
        return range(self.k)


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple[Fraction, ...]
    role: str = FUNCTION

    def __post_init__(self):
        coords = tuple(to_rational(c) for c in self.coords)
        if not coords:
            raise ValueError("a lattice vector needs at least one coordinate")
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        object.__setattr__(self, "coords", coords)

    @property
    def k(self) -> int:
        return len(self.coords)

    @property
    def space(self) -> Space:
        return Space(len(self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def _same_space(self, other: LatticeVector) -> None:
        if self.k != other.k:
            raise DimensionError(f"dimension mismatch: {self.k} vs {other.k}")

    def _like(self, coords: Iterable[Fraction]) -> LatticeVector:
        return LatticeVector(tuple(coords), self.role)

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._same_space(other)
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._same_space(other)
        return self._like(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> LatticeVector:
        return self._like(-a for a in self.coords)

    def scale(self, c) -> LatticeVector:
        c = to_rational(c)
        return self._like(c * a for a in self.coords)

    def dot(self, other: LatticeVector) -> Fraction:
        """The duality pairing <mu, x> = sum_i mu_i x_i."""
        self._same_space(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def as_role(self, role: str) -> LatticeVector:
        return LatticeVector(self.coords, role)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c != 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coords)
        return f"{self.role[0]}({body})"


def vector(values: Iterable, role: str = FUNCTION) -> LatticeVector:
    return LatticeVector(tuple(values), role)


def function(*values) -> LatticeVector:
    return LatticeVector(tuple(values), FUNCTION)


def measure(*values) -> LatticeVector:
    return LatticeVector(tuple(values), MEASURE)


def zeros(k: int, role: str = FUNCTION) -> LatticeVector:
    return LatticeVector((Fraction(0),) * k, role)


def ones(k: int) -> LatticeVector:
    """The constant function 1_K."""
    return LatticeVector((Fraction(1),) * k, FUNCTION)


def delta(k: int, t: int) -> LatticeVector:
    """Point mass at t (the t-th standard basis vector, as a measure)."""
    if not 0 <= t < k:
        raise IndexError(f"point {t} outside K = {{0..{k - 1}}}")
    return LatticeVector(tuple(Fraction(int(i == t)) for i in range(k)), MEASURE)


def from_json(values: Sequence, role: str = FUNCTION) -> LatticeVector:
    return LatticeVector(tuple(to_rational(v) for v in values), role)


def jordan_decompose(v: LatticeVector) -> tuple[LatticeVector, LatticeVector]:
    """Split v into disjoint positive and negative parts, v = pos - neg.

    For a measure this is also the Hahn decomposition, with positive set
    {i : v_i > 0}.
    """
    zero = Fraction(0)
    pos = v._like(max(c, zero) for c in v.coords)
    neg = v._like(max(-c, zero) for c in v.coords)
    return pos, neg


def positive_part(v: LatticeVector) -> LatticeVector:
    return jordan_decompose(v)[0]


def negative_part(v: LatticeVector) -> LatticeVector:
    return jordan_decompose(v)[1]


def meet(v: LatticeVector, w: LatticeVector) -> LatticeVector:
    v._same_space(w)
    return v._like(min(a, b) for a, b in zip(v.coords, w.coords))


def join(v: LatticeVector, w: LatticeVector) -> LatticeVector:
    v._same_space(w)
    return v._like(max(a, b) for a, b in zip(v.coords, w.coords))


def lattice_abs(v: LatticeVector) -> LatticeVector:
    return v._like(abs(c) for c in v.coords)


def is_disjoint(v: LatticeVector, w: LatticeVector) -> bool:
    """|v| meet |w| == 0, i.e. the supports do not overlap."""
    return meet(lattice_abs(v), lattice_abs(w)).is_zero()


def total_mass(mu: LatticeVector) -> Fraction:
    """mu(K)."""
    if mu.role != MEASURE:
        raise PreconditionError("total_mass expects a measure")
    return sum(mu.coords, Fraction(0))

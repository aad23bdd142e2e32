"""Unit balls as exact polytopes.

Each of the four balls is written down as an H-representation and its
vertices are recovered by scanning basic solutions: every k-subset of facet
normals that is linearly independent determines a point, and the feasible
ones are the vertices.  The closed-form extreme sets are kept separately in
:func:`predicted_extremes` so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, gcd, lcm
from typing import Sequence

from .core import (
    FUNCTION,
    MEASURE,
    CapacityError,
    DimensionError,
    LatticeVector,
    OackError,
    check_cap,
    vector,
)

NORMS = ("sup", "d", "var", "zero")
FUNCTION_NORMS = ("sup", "d")
MEASURE_NORMS = ("var", "zero")

# Upper bound on the number of facet subsets a single enumeration may scan.
SUBSET_BUDGET = 250_000

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class DegeneratePolytopeError(OackError, ValueError):
    """The H-representation is unbounded or does not contain 0 in its interior."""


def role_for(norm: str) -> str:
    if norm in FUNCTION_NORMS:
        return FUNCTION
    if norm in MEASURE_NORMS:
        return MEASURE
    raise ValueError(f"unknown norm {norm!r}; expected one of {NORMS}")


@dataclass(frozen=True)
class HRep:
    """Polytope {x : a . x <= b for every (a, b) in rows}."""

    k: int
    rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    role: str = FUNCTION

    def __len__(self) -> int:
        return len(self.rows)

    def gauge(self, x: Sequence[Fraction]) -> Fraction:
        """Minkowski functional of the polytope (its norm, for symmetric balls)."""
        return max(_dot(a, x) / b for a, b in self.rows)


@dataclass(frozen=True)
class VRep:
    vertices: tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def as_set(self) -> frozenset[tuple[Fraction, ...]]:
        return frozenset(v.coords for v in self.vertices)

    def to_json(self) -> list[list[str]]:
        return [v.to_json() for v in self.vertices]


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))


def _vrep(points, role: str) -> VRep:
    unique = sorted(set(tuple(p) for p in points))
    return VRep(tuple(vector(p, role) for p in unique))


def _nonempty_subsets(k: int):
    for r in range(1, k + 1):
        yield from combinations(range(k), r)


def ball_hrep(norm: str, k: int) -> HRep:
    """Facet description of the closed unit ball of ``norm`` on R^k."""
    role = role_for(norm)
    if k < 1:
        raise ValueError("k must be at least 1")
    one = Fraction(1)
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = []

    def unit(i: int, s: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(s if j == i else 0) for j in range(k))

    if norm in ("sup", "d"):
        for i in range(k):
            rows.append((unit(i, 1), one))
            rows.append((unit(i, -1), one))
        if norm == "d":
            for i in range(k):
                for j in range(k):
                    if i != j:
                        a = tuple(Fraction((m == i) - (m == j)) for m in range(k))
                        rows.append((a, one))
    elif norm == "var":
        check_cap(k, "var ball facets")
        for signs in product((1, -1), repeat=k):
            rows.append((tuple(Fraction(s) for s in signs), one))
    else:
        check_cap(k, "zero ball facets")
        for subset in _nonempty_subsets(k):
            a = tuple(Fraction(int(i in subset)) for i in range(k))
            rows.append((a, one))
            rows.append((tuple(-c for c in a), one))
    return HRep(k, tuple(rows), role)


def _solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a square system exactly.  Returns None when singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _null_direction(rows: Sequence[Sequence[Fraction]], k: int):
    """A nonzero d with rows . d = 0 when the rows have rank k-1, else None."""
    for i in range(k):
        # pin d_i = 1 and solve for the rest
        others = [j for j in range(k) if j != i]
        if len(rows) != len(others):
            return None
        sub = [[r[j] for j in others] for r in rows]
        sol = _solve(sub, [-r[i] for r in rows])
        if sol is not None:
            d = [Fraction(0)] * k
            d[i] = Fraction(1)
            for j, v in zip(others, sol):
                d[j] = v
            return tuple(d)
    return None


def _check_bounded(h: HRep) -> None:
    normals = [a for a, _ in h.rows]
    if any(b <= 0 for _, b in h.rows):
        raise DegeneratePolytopeError("0 is not an interior point")
    if matrix_rank(normals) < h.k:
        raise DegeneratePolytopeError("facet normals do not span R^k: unbounded")
    if h.k == 1:
        signs = {a[0] > 0 for a in normals if a[0] != 0}
        if signs != {True, False}:
            raise DegeneratePolytopeError("unbounded in one direction")
        return
    # A pointed recession cone {d : A d <= 0} is trivial iff none of its
    # candidate extreme rays (k-1 tight, independent facets) is feasible.
    for subset in combinations(normals, h.k - 1):
        if matrix_rank(subset) < h.k - 1:
            continue
        d = _null_direction(subset, h.k)
        if d is None:
            continue
        for s in (1, -1):
            ray = tuple(s * c for c in d)
            if all(_dot(a, ray) <= 0 for a in normals):
                raise DegeneratePolytopeError(f"unbounded along {ray}")


def enumerate_vertices(h: HRep) -> VRep:
    """Exact vertex set of a bounded polytope by basic-solution scan."""
    check_cap(h.k, "vertex enumeration")
    work = comb(len(h.rows), h.k)
    if work > SUBSET_BUDGET:
        raise CapacityError(
            f"vertex enumeration: {work} facet subsets exceeds budget {SUBSET_BUDGET}"
        )
    return _enumerate_cached(h)


def _integer_rows(h: HRep) -> tuple[list[list[int]], list[int]]:
    """Scale every inequality to integer coefficients (same half-space)."""
    normals, rhs = [], []
    for a, b in h.rows:
        scale = lcm(*(c.denominator for c in a), b.denominator)
        normals.append([int(c * scale) for c in a])
        rhs.append(int(b * scale))
    return normals, rhs


def _solve_int(rows: Sequence[Sequence[int]], rhs: Sequence[int]):
    """Integer Gauss-Jordan.  Returns (numerators, denominator) or None if singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        prow = m[col]
        p = prow[col]
        for r in range(n):
            f = m[r][col]
            if r != col and f != 0:
                row = [p * a - f * b for a, b in zip(m[r], prow)]
                g = gcd(*row)
                m[r] = [a // g for a in row] if g > 1 else row
    den = lcm(*(m[i][i] for i in range(n)))
    if den < 0:
        den = -den
    num = [m[i][n] * (den // m[i][i]) for i in range(n)]
    g = gcd(den, *num)
    return tuple(c // g for c in num), den // g


@lru_cache(maxsize=64)
def _enumerate_cached(h: HRep) -> VRep:
    _check_bounded(h)
    normals, rhs = _integer_rows(h)
    found: set[tuple[tuple[int, ...], int]] = set()
    for idx in combinations(range(len(normals)), h.k):
        sol = _solve_int([normals[i] for i in idx], [rhs[i] for i in idx])
        if sol is None or sol in found:
            continue
        num, den = sol
        if all(sum(a * x for a, x in zip(row, num)) <= b * den for row, b in zip(normals, rhs)):
            found.add(sol)
    return _vrep((tuple(Fraction(c, den) for c in num) for num, den in found), h.role)


def predicted_extremes(norm: str, k: int) -> VRep:
    """Closed-form extreme points of the unit ball of ``norm`` on R^k.

    d:    nonzero {0,1}-vectors and their negatives, 2(2^k - 1) of them.
    zero: +-delta_t and delta_s - delta_t (s != t), 2k + k(k-1) of them.
    var:  +-delta_t.
    sup:  {+-1}^k.
    """
    role = role_for(norm)
    if k < 1:
        raise ValueError("k must be at least 1")
    pts: list[tuple[int, ...]] = []
    if norm == "d":
        for bits in product((0, 1), repeat=k):
            if any(bits):
                pts.append(bits)
                pts.append(tuple(-b for b in bits))
    elif norm == "zero":
        for t in range(k):
            e = tuple(int(i == t) for i in range(k))
            pts.append(e)
            pts.append(tuple(-c for c in e))
        for s in range(k):
            for t in range(k):
                if s != t:
                    pts.append(tuple((i == s) - (i == t) for i in range(k)))
    elif norm == "var":
        for t in range(k):
            for sgn in (1, -1):
                pts.append(tuple(sgn * int(i == t) for i in range(k)))
    else:
        pts.extend(product((1, -1), repeat=k))
    return _vrep((tuple(Fraction(c) for c in p) for p in pts), role)


def membership(h: HRep, x: LatticeVector) -> str:
    if x.k != h.k:
        raise DimensionError(f"dimension mismatch: {x.k} vs {h.k}")
    slack = [_dot(a, x.coords) - b for a, b in h.rows]
    if any(s > 0 for s in slack):
        return OUTSIDE
    if any(s == 0 for s in slack):
        return BOUNDARY
    return INTERIOR


def support_value(h: HRep, direction: LatticeVector) -> Fraction:
    """max over the polytope of <direction, v>, by vertex scan."""
    if direction.k != h.k:
        raise DimensionError(f"dimension mismatch: {direction.k} vs {h.k}")
    return max(_dot(direction.coords, v.coords) for v in enumerate_vertices(h))

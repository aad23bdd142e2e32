"""Linear isometries of the polytopal unit balls and their classification.

Search and classification are deliberately independent.  The search finds
every linear map that permutes the vertices of the ball.  The classifier
looks only at the rows of a map (rows are the transposed action on point
masses) and sorts d-norm isometries into

* canonical:    (Tx)(s) = sign * x(phi(s)), phi a permutation;
* noncanonical: (Tx)(t) = sign * x(p) and (Tx)(s) = sign * (x(p) - x(phi(s)))
  for s != t, phi a bijection K minus {t} -> K minus {p}.

Every point of a finite discrete K is isolated, so both kinds occur.  The
"no isolated points" branch, where only canonical maps exist, has no finite
instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .core import (
    LatticeVector,
    OackError,
    PreconditionError,
    TheoremViolation,
    check_cap,
    delta,
    measure,
    vector,
)
from .oapoly import OAPoly, is_odd, sup_norm_poly, reg_norm_poly
from .polytope import ball_hrep, enumerate_vertices, matrix_rank

ZERO = Fraction(0)
CANONICAL = "canonical"
NONCANONICAL = "noncanonical"


class ClassificationError(TheoremViolation):
    """A d-norm isometry fits neither canonical nor noncanonical form."""


@dataclass(frozen=True, order=True)
class LinMap:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(c) for c in r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("a LinMap must be a nonempty square matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, k: int) -> LinMap:
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k)))

    @property
    def k(self) -> int:
        return len(self.rows)

    def __call__(self, x: LatticeVector) -> LatticeVector:
        return vector((sum((a * b for a, b in zip(r, x)), ZERO) for r in self.rows), x.role)

    def __matmul__(self, other: LinMap) -> LinMap:
        cols = list(zip(*other.rows))
        return LinMap(tuple(tuple(sum((a * b for a, b in zip(r, c)), ZERO) for c in cols) for r in self.rows))

    def transpose(self) -> LinMap:
        return LinMap(tuple(zip(*self.rows)))

    def __neg__(self) -> LinMap:
        return LinMap(tuple(tuple(-c for c in r) for r in self.rows))

    def inverse(self) -> LinMap:
        k = self.k
        m = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(self.rows)]
        for col in range(k):
            pivot = next((r for r in range(col, k) if m[r][col] != 0), None)
            if pivot is None:
                raise OackError("map is singular")
            m[col], m[pivot] = m[pivot], m[col]
            p = m[col][col]
            m[col] = [a / p for a in m[col]]
            for r in range(k):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return LinMap(tuple(tuple(r[k:]) for r in m))

    def transpose_action(self, mu: LatticeVector) -> LatticeVector:
        """T^t mu: the measure x -> mu(Tx)."""
        return measure(*self.transpose()(mu))

    def to_json(self) -> list[list[str]]:
        return [[str(c) for c in r] for r in self.rows]


def _gauge(rows, x) -> Fraction:
    return max(sum((a * c for a, c in zip(row, x)), ZERO) / b for row, b in rows)


def _columns_to_map(targets: Sequence[Sequence[Fraction]], ref_inverse: LinMap) -> LinMap:
    # T = W R^{-1}, with W holding the target vertices as columns
    w = LinMap(tuple(zip(*targets)))
    return w @ ref_inverse


def enumerate_isometries(norm: str, k: int) -> list[LinMap]:
    """All linear maps of R^k preserving the unit ball of ``norm``.

    A linear map preserves a polytope centred at 0 iff it permutes its
    vertices.  A reference basis of vertices is fixed; every ordered tuple
    of vertices that could be its image is tried, pruning early on pairwise
    gauge values of sums and differences (a linear isometry must keep them).
    """
    check_cap(k, "isometry enumeration")
    h = ball_hrep(norm, k)
    verts = [v.coords for v in enumerate_vertices(h)]
    vset = set(verts)

    ref: list[tuple[Fraction, ...]] = []
    for v in verts:
        if _independent(ref + [v]):
            ref.append(v)
        if len(ref) == k:
            break
    ref_inv = LinMap(tuple(zip(*ref))).inverse()

    def pair_invariants(a, b):
        return (
            _gauge(h.rows, tuple(x + y for x, y in zip(a, b))),
            _gauge(h.rows, tuple(x - y for x, y in zip(a, b))),
        )

    ref_pairs = {(i, j): pair_invariants(ref[i], ref[j]) for i in range(k) for j in range(i)}

    found: set[LinMap] = set()

    def extend(chosen: list[tuple[Fraction, ...]]):
        i = len(chosen)
        if i == k:
            if not _independent(chosen):
                return
            T = _columns_to_map(chosen, ref_inv)
            if all(T(vector(v)).coords in vset for v in verts):
                found.add(T)
            return
        for v in verts:
            if v in chosen:
                continue
            if any(pair_invariants(v, chosen[j]) != ref_pairs[(i, j)] for j in range(i)):
                continue
            chosen.append(v)
            extend(chosen)
            chosen.pop()

    extend([])
    return sorted(found)


def _independent(vectors: Sequence[Sequence[Fraction]]) -> bool:
    return matrix_rank(vectors) == len(vectors)


@dataclass(frozen=True)
class IsometryReport:
    map: LinMap
    kind: str
    sign: int
    phi: tuple[tuple[int, int], ...]
    p: Optional[int] = None
    t: Optional[int] = None

    def phi_dict(self) -> dict[int, int]:
        return dict(self.phi)

    def to_json(self) -> dict:
        data: dict = {"sign": self.sign, "phi": {str(s): q for s, q in self.phi}}
        if self.kind == NONCANONICAL:
            data.update(p=self.p, t=self.t)
        return {"matrix": self.map.to_json(), "kind": self.kind, "data": data}


def _signed_unit(row: Sequence[Fraction]) -> Optional[tuple[int, int]]:
    nz = [(j, c) for j, c in enumerate(row) if c != 0]
    if len(nz) == 1 and abs(nz[0][1]) == 1:
        j, c = nz[0]
        return j, int(c)
    return None


def classify(T: LinMap) -> IsometryReport:
    """Canonical or noncanonical form of a d-norm isometry, read off its rows.

    Row t of T is T^t(delta_t).  S_L collects the rows that are +-delta_s.
    Raises :class:`ClassificationError` when |S_L| is neither k nor 1.
    """
    k = T.k
    units = {t: _signed_unit(row) for t, row in enumerate(T.rows)}
    S = [t for t, u in units.items() if u is not None]

    if len(S) == k:
        signs = {units[t][1] for t in S}
        if len(signs) != 1:
            raise ClassificationError(f"canonical map with non-constant sign: {T.to_json()}")
        sign = signs.pop()
        phi = tuple((t, units[t][0]) for t in range(k))
        if len({q for _, q in phi}) != k:
            raise ClassificationError(f"rows do not define a bijection: {T.to_json()}")
        report = IsometryReport(T, CANONICAL, sign, phi)
    elif len(S) == 1:
        t = S[0]
        p, sign = units[t]
        phi_items = []
        for s in range(k):
            if s == t:
                continue
            row = [sign * c for c in T.rows[s]]
            if row[p] != 1:
                raise ClassificationError(f"row {s} does not start from x(p): {T.to_json()}")
            rest = [(j, c) for j, c in enumerate(row) if j != p and c != 0]
            if len(rest) != 1 or rest[0][1] != -1:
                raise ClassificationError(f"row {s} is not x(p) - x(q): {T.to_json()}")
            phi_items.append((s, rest[0][0]))
        if len({q for _, q in phi_items}) != k - 1:
            raise ClassificationError(f"phi is not a bijection: {T.to_json()}")
        report = IsometryReport(T, NONCANONICAL, sign, tuple(phi_items), p=p, t=t)
    else:
        raise ClassificationError(f"|S_L| = {len(S)} for k = {k}: {T.to_json()}")

    if rebuild(report) != T:
        raise ClassificationError(f"extracted form does not reproduce {T.to_json()}")
    return report


def rebuild(report: IsometryReport) -> LinMap:
    """The matrix described by a report's (kind, sign, phi, p, t)."""
    k = report.map.k
    rows = [[0] * k for _ in range(k)]
    phi = report.phi_dict()
    if report.kind == CANONICAL:
        for s in range(k):
            rows[s][phi[s]] = report.sign
    else:
        rows[report.t][report.p] = report.sign
        for s, q in phi.items():
            rows[s][report.p] = report.sign
            rows[s][q] = -report.sign
    return LinMap(tuple(tuple(r) for r in rows))


def _measure_action(report: IsometryReport) -> Callable[[LatticeVector], LatticeVector]:
    k = report.map.k
    phi = report.phi_dict()
    sign = report.sign

    if report.kind == CANONICAL:

        def act(mu: LatticeVector) -> LatticeVector:
            out = [ZERO] * k
            for s, q in phi.items():
                out[q] += sign * mu[s]
            return measure(*out)

    else:
        p = report.p

        def act(mu: LatticeVector) -> LatticeVector:
            # mu(K) delta_p minus the pushforward of mu restricted off t
            out = [ZERO] * k
            out[p] += sum(mu, ZERO)
            for s, q in phi.items():
                out[q] -= mu[s]
            return measure(*(sign * c for c in out))

    return act


def _probe_measures(k: int) -> Iterable[LatticeVector]:
    for t in range(k):
        yield delta(k, t)
    for s in range(k):
        for t in range(k):
            if s != t:
                yield delta(k, s) - delta(k, t)
    yield measure(*(Fraction((-1) ** i * (i + 1), i + 2) for i in range(k)))


def induced_poly_isometry(report: IsometryReport, n: int) -> Callable[[OAPoly], OAPoly]:
    """Isometry of (polynomials of even degree n, sup norm) induced by a d-isometry.

    Canonical reports give P -> P o C_phi, i.e. sign times the pushforward of
    the measure along phi.  Noncanonical reports give
    P -> P(1_K) delta_p^n - P_2 o C_phi, with P_2 the part of P off t.
    The returned map is checked on a fixed probe set before it is handed out.
    """
    if is_odd(n):
        raise PreconditionError(
            "induced_poly_isometry needs even n; use induced_reg_isometry for the regular norm"
        )
    act = _measure_action(report)

    def apply(P: OAPoly) -> OAPoly:
        if P.degree != n:
            raise PreconditionError(f"expected degree {n}, got {P.degree}")
        return OAPoly(n, act(P.mu))

    for mu in _probe_measures(report.map.k):
        P = OAPoly(n, mu)
        if sup_norm_poly(apply(P)) != sup_norm_poly(P):
            raise TheoremViolation(f"induced map does not preserve the sup norm at {mu}")
    return apply


def induced_reg_isometry(report: IsometryReport, n: int) -> Callable[[OAPoly], OAPoly]:
    """Regular-norm isometry induced by a canonical map: signed pushforward of mu."""
    if report.kind != CANONICAL:
        raise PreconditionError("only canonical maps induce regular-norm isometries")
    act = _measure_action(report)

    def apply(P: OAPoly) -> OAPoly:
        if P.degree != n:
            raise PreconditionError(f"expected degree {n}, got {P.degree}")
        return OAPoly(n, act(P.mu))

    for mu in _probe_measures(report.map.k):
        P = OAPoly(n, mu)
        if reg_norm_poly(apply(P)) != reg_norm_poly(P):
            raise TheoremViolation(f"induced map does not preserve the regular norm at {mu}")
    return apply

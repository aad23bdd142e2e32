"""Seeded property suites, one per acceptance criterion.

Each suite draws its corpus from ``random.Random`` seeded with the suite
name and the user seed, so identical inputs give identical reports.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .core import (
    CapacityError,
    LatticeVector,
    OackError,
    jordan_decompose,
    measure,
    total_mass,
    vector,
)
from .expose import exposes, exposing_witness, is_frechet, is_gateaux, norming_face, strongly_exposes
from .genpoly import (
    SymPoly,
    is_orthogonally_additive,
    is_orthogonally_additive_blackbox,
    is_orthosymmetric,
    power_functional_test,
)
from .isometry import (
    CANONICAL,
    NONCANONICAL,
    LinMap,
    classify,
    enumerate_isometries,
    induced_poly_isometry,
)
from .norms import d_norm, dual_norm_oracle, var_norm, zero_norm
from .oapoly import (
    OAPoly,
    abs_eval,
    check_basic,
    is_odd,
    local_sup,
    reg_norm_poly,
    sup_norm_bruteforce,
    sup_norm_poly,
)
from .polytope import NORMS, ball_hrep, enumerate_vertices, predicted_extremes

# Regression value produced by the vertex-permutation search, not taken
# from any closed formula.
D_ISOMETRIES_K3 = 48


@dataclass(frozen=True)
class Scale:
    k_max: Optional[int] = None
    n_max: Optional[int] = None
    trials: Optional[int] = None

    def k(self, default: int) -> int:
        return self.k_max if self.k_max is not None else default

    def n(self, default: int) -> int:
        return self.n_max if self.n_max is not None else default

    def count(self, default: int) -> int:
        return self.trials if self.trials is not None else default


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, label: str, expected, actual, **inputs) -> bool:
        self.cases += 1
        if expected == actual:
            return True
        self.failures.append(
            {
                "case": label,
                "inputs": {k: _jsonable(v) for k, v in inputs.items()},
                "expected": _jsonable(expected),
                "actual": _jsonable(actual),
            }
        )
        return False

    def holds(self, label: str, condition: bool, **inputs) -> bool:
        return self.expect(label, True, bool(condition), **inputs)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (LatticeVector, LinMap, OAPoly, SymPoly)):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def random_rational(rng: random.Random, span: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_measure(rng: random.Random, k: int) -> LatticeVector:
    return measure(*(random_rational(rng) for _ in range(k)))


def random_function(rng: random.Random, k: int) -> LatticeVector:
    return vector(random_rational(rng) for _ in range(k))


def random_nonnegative(rng: random.Random, k: int) -> LatticeVector:
    return vector(Fraction(rng.randint(0, 9), rng.randint(1, 6)) for _ in range(k))


def _random_unit(rng: random.Random, k: int) -> LatticeVector:
    while True:
        if rng.random() < 0.5:
            # coarse grid: ties and boundary cases are common here
            x = vector(Fraction(rng.randint(-2, 2), 2) for _ in range(k))
        else:
            x = random_function(rng, k)
        if not x.is_zero():
            return x.scale(1 / d_norm(x))


def _poly_corpus(rng: random.Random, count: int, k_max: int, n_max: int):
    for _ in range(count):
        k = rng.randint(1, k_max)
        n = rng.randint(1, n_max)
        yield OAPoly(n, random_measure(rng, k))


def suite_norms(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for P in _poly_corpus(rng, scale.count(200), scale.k(5), scale.n(6)):
        report.expect("bruteforce sup = closed form", sup_norm_bruteforce(P), sup_norm_poly(P), P=P)
        report.expect("regular norm = variation", var_norm(P.mu), reg_norm_poly(P), P=P)


def suite_parity(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for P in _poly_corpus(rng, scale.count(200), scale.k(5), scale.n(6)):
        sup, reg = sup_norm_poly(P), reg_norm_poly(P)
        if is_odd(P.degree):
            report.expect("odd: sup = regular", sup, reg, P=P)
        else:
            report.holds("even: sup <= regular <= 2 sup", sup <= reg <= 2 * sup, P=P)
    witness = OAPoly.from_coeffs([1, -1], 2)
    report.expect("witness ratio", Fraction(2), reg_norm_poly(witness) / sup_norm_poly(witness), P=witness)


def suite_identity(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for _ in range(scale.count(1000)):
        mu = random_measure(rng, rng.randint(1, scale.k(6)))
        pos, neg = jordan_decompose(mu)
        by_max = max(sum(pos.coords, Fraction(0)), sum(neg.coords, Fraction(0)))
        by_mass = (var_norm(mu) + abs(total_mass(mu))) / 2
        report.expect("max form = mass form", by_max, by_mass, mu=mu)
        z, v = zero_norm(mu), var_norm(mu)
        report.holds("||mu||_0 <= ||mu||_1 <= 2||mu||_0", z <= v <= 2 * z, mu=mu)


def suite_duality(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for _ in range(scale.count(100)):
        mu = random_measure(rng, rng.randint(1, scale.k(4)))
        report.expect("vertex-scan dual of d = zero norm", zero_norm(mu), dual_norm_oracle(mu, "d"), mu=mu)


def suite_extremes(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for k in range(1, scale.k(4) + 1):
        for norm in NORMS:
            enumerated = enumerate_vertices(ball_hrep(norm, k))
            predicted = predicted_extremes(norm, k)
            report.expect("enumerated = predicted", predicted.as_set(), enumerated.as_set(), norm=norm, k=k)
        report.expect("|ext B_d| = 2(2^k - 1)", 2 * (2**k - 1), len(predicted_extremes("d", k)), k=k)
        report.expect("|ext B_0| = 2k + k(k-1)", 2 * k + k * (k - 1), len(predicted_extremes("zero", k)), k=k)


def suite_sharpness(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for _ in range(scale.count(200)):
        k = rng.randint(1, scale.k(5))
        P = OAPoly(rng.randint(1, scale.n(6)), random_measure(rng, k))
        x = random_nonnegative(rng, k)
        value, bound = abs_eval(P, x), local_sup(P, x)
        if is_odd(P.degree):
            report.expect("odd: |P|(x) = local sup", bound, value, P=P, x=x)
        else:
            report.holds("even: |P|(x) <= 2 local sup", value <= 2 * bound, P=P, x=x)
    witness = check_basic(OAPoly.from_coeffs([1, -1], 2), vector([1, 1]))
    report.expect("witness mu=(1,-1), n=2, x=(1,1): ratio", Fraction(2), witness.ratio)
    report.expect("witness |P|(x)", Fraction(2), witness.abs_value)
    report.expect("witness local sup", Fraction(1), witness.local_sup)


def _grid(k: int):
    values = [Fraction(v, 2) for v in range(-2, 3)]
    return [vector(p) for p in product(values, repeat=k)]


def suite_isometries(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    group = enumerate_isometries("d", 2)
    report.expect("|Iso(R^2, d)|", 12, len(group))
    gset = set(group)
    example = LinMap(((1, 0), (1, -1)))
    report.holds("contains (x1, x2) -> (x1, x1 - x2)", example in gset)
    report.holds("closed under composition", all(a @ b in gset for a in group for b in group))
    report.holds("closed under inverse", all(a.inverse() in gset for a in group))
    kinds = []
    for T in group:
        try:
            kinds.append(classify(T).kind)
        except OackError as exc:
            report.holds("classify", False, T=T, error=str(exc))
        for x in _grid(2):
            if d_norm(T(x)) != d_norm(x):
                report.holds("d-norm preserved", False, T=T, x=x)
                break
    report.expect("canonical count", 4, kinds.count(CANONICAL))
    report.expect("noncanonical count", 8, kinds.count(NONCANONICAL))

    group3 = enumerate_isometries("d", 3)
    report.expect("|Iso(R^3, d)| (frozen)", D_ISOMETRIES_K3, len(group3))
    for T in group3:
        try:
            classify(T)
            report.holds("classify k=3", True)
        except OackError as exc:
            report.holds("classify k=3", False, T=T, error=str(exc))


def suite_induced(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    groups = {k: [classify(T) for T in enumerate_isometries("d", k)] for k in (1, 2, 3)}
    for _ in range(scale.count(100)):
        k = rng.randint(1, min(scale.k(3), 3))
        n = 2 * rng.randint(1, max(1, scale.n(6) // 2))
        rep = rng.choice(groups[k])
        P = OAPoly(n, random_measure(rng, k))
        image = induced_poly_isometry(rep, n)(P)
        report.expect("sup norm preserved", sup_norm_poly(P), sup_norm_poly(image), P=P, T=rep.map)
        report.expect("measure action = transpose", rep.map.transpose_action(P.mu), image.mu, P=P, T=rep.map)


def suite_smoothness(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    k_max = scale.k(4)
    for _ in range(scale.count(500)):
        x = _random_unit(rng, rng.randint(1, k_max))
        try:
            flag, derivative = is_gateaux(x)
        except OackError as exc:
            report.holds("face vs closed-form criteria", False, x=x, error=str(exc))
            continue
        report.holds("face vs closed-form criteria", True)
        report.expect("frechet = gateaux", (flag, derivative), is_frechet(x), x=x)
        face = norming_face(x)
        for mu in face.extremes:
            if exposes(x, mu):
                report.holds("exposed => singleton face", len(face) == 1, x=x, mu=mu)
    for k in range(1, k_max + 1):
        for mu in predicted_extremes("zero", k):
            x = exposing_witness(mu)
            report.holds("witness strongly exposes target", strongly_exposes(x, mu), x=x, mu=mu)


def _random_sympoly(rng: random.Random, k: int, n: int) -> SymPoly:
    from itertools import combinations_with_replacement

    alphas = [tuple(idx.count(i) for i in range(k)) for idx in combinations_with_replacement(range(k), n)]
    diagonal = [a for a in alphas if sum(1 for c in a if c) == 1]
    cross = [a for a in alphas if sum(1 for c in a if c) > 1]
    chosen = rng.sample(diagonal, rng.randint(0, len(diagonal)))
    if cross and rng.random() < 0.5:
        chosen += rng.sample(cross, rng.randint(1, min(2, len(cross))))
    return SymPoly(n, k, {a: random_rational(rng) for a in chosen})


def suite_orthosymmetry(rng: random.Random, scale: Scale, report: CheckReport) -> None:
    for _ in range(scale.count(200)):
        P = _random_sympoly(rng, rng.randint(1, scale.k(3)), rng.randint(1, scale.n(4)))
        try:
            oa = is_orthogonally_additive(P)
            os_ = is_orthosymmetric(P)
        except OackError as exc:
            report.holds("orthosymmetry", False, P=P, error=str(exc))
            continue
        bb = is_orthogonally_additive_blackbox(P, trials=10, seed=rng.randrange(2**31))
        report.expect("additive = orthosymmetric = black-box", (oa, oa), (os_, bb), P=P)
    for _ in range(scale.count(100)):
        k = rng.randint(1, scale.k(3))
        support = rng.sample(range(k), rng.randint(0, k))
        phi = measure(*(random_rational(rng) if i in support else 0 for i in range(k)))
        n = rng.randint(2, max(2, scale.n(4)))
        try:
            oa, hom = power_functional_test(phi, n)
        except OackError as exc:
            report.holds("phi^n vs lattice homomorphism", False, phi=phi, error=str(exc))
            continue
        report.expect("phi^n additive iff |supp phi| <= 1", len(phi.support()) <= 1, oa, phi=phi, n=n)


SUITES: dict[str, Callable[[random.Random, Scale, CheckReport], None]] = {
    "norms": suite_norms,
    "parity": suite_parity,
    "identity": suite_identity,
    "duality": suite_duality,
    "extremes": suite_extremes,
    "sharpness": suite_sharpness,
    "isometries": suite_isometries,
    "induced": suite_induced,
    "smoothness": suite_smoothness,
    "orthosymmetry": suite_orthosymmetry,
}


# suites that must see the same random corpus as another suite
CORPUS = {"parity": "norms"}


def run_suite(name: str, seed: int = 0, scale: Scale = Scale()) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    report = CheckReport(name)
    rng = random.Random(f"{seed}:{CORPUS.get(name, name)}")
    start = time.perf_counter()
    try:
        SUITES[name](rng, scale, report)
    except CapacityError:
        raise
    except OackError as exc:
        report.failures.append({"case": "uncaught", "error": f"{type(exc).__name__}: {exc}"})
    report.wall_time = time.perf_counter() - start
    return report


def run_checks(suite: str = "all", seed: int = 0, scale: Scale = Scale()) -> list[CheckReport]:
    names = list(SUITES) if suite == "all" else [suite]
    return [run_suite(name, seed, scale) for name in names]

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from oack.core import MEASURE, LatticeVector, PreconditionError, DimensionError, delta, function, measure, ones, vector
from oack.norms import var_norm, zero_norm
from oack.oapoly import (
    OAPoly,
    abs_eval,
    abs_poly,
    atomic_partition,
    check_basic,
    evaluate,
    is_orthogonally_additive_eval,
    local_sup,
    multilinear,
    partition_oracle,
    partition_value,
    reg_norm_poly,
    sup_norm_bruteforce,
    sup_norm_poly,
)

from .conftest import nonneg_rationals, rationals


@st.composite
def polys(draw, max_k=5, max_n=6):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(1, max_n))
    mu = draw(st.lists(rationals, min_size=k, max_size=k))
    return OAPoly(n, LatticeVector(tuple(mu), MEASURE))


@st.composite
def poly_and_point(draw, max_k=4, max_n=6):
    P = draw(polys(max_k, max_n))
    x = draw(st.lists(nonneg_rationals, min_size=P.k, max_size=P.k))
    return P, vector(x)


def test_eval_examples():
    P = OAPoly.from_coeffs([1, -1], 2)
    assert evaluate(P, function(2, 1)) == 3
    assert P(function(1, 1)) == 0
    for n in (1, 2, 5):
        assert OAPoly.point_power(3, 1, n)(ones(3)) == 1


def test_eval_dimension_mismatch():
    with pytest.raises(DimensionError):
        OAPoly.from_coeffs([1, 2], 2)(function(1))


def test_abs_examples():
    assert abs_eval(OAPoly.from_coeffs([1, -1], 2), function(1, 1)) == 2
    assert abs_eval(OAPoly.from_coeffs([0, 0], 4), function(3, 1)) == 0
    assert abs_eval(OAPoly.from_coeffs([3, -1], 3), function(1, 2)) == 11
    assert abs_poly(OAPoly.from_coeffs([3, -1], 3)).mu == measure(3, 1)


def test_abs_eval_precondition():
    with pytest.raises(PreconditionError):
        abs_eval(OAPoly.from_coeffs([1, 1], 2), function(1, -1))


def test_multilinear_restricts_to_polynomial():
    P = OAPoly.from_coeffs([2, -3, 1], 3)
    x = function(1, Fraction(1, 2), -2)
    assert multilinear(P, x, x, x) == P(x)
    e = [function(*(int(i == j) for j in range(3))) for i in range(3)]
    assert multilinear(P, e[0], e[0], e[1]) == 0
    assert multilinear(P, e[1], e[1], e[1]) == -3


def test_partition_oracle_examples():
    P = OAPoly.from_coeffs([1, -1], 2)
    x = function(1, 1)
    # atomic partition: A(e_i, e_j) = mu_i [i == j], so the sum is |1| + |-1|
    assert partition_value(P, [atomic_partition(x)] * 2) == 2
    assert partition_oracle(P, x) == 2
    assert partition_oracle(P, function(0, 0)) == 0
    Q = OAPoly.from_coeffs([2, 3], 2)
    for seed in range(20):
        assert partition_oracle(Q, x, budget=16, seed=seed, include_atomic=False) <= 5


@given(poly_and_point(max_k=3, max_n=4), st.integers(0, 1000))
def test_partition_oracle_bounded_by_abs_value(pair, seed):
    P, x = pair
    assert partition_oracle(P, x, budget=6, seed=seed, include_atomic=False) <= abs_eval(P, x)
    assert partition_oracle(P, x, budget=2, seed=seed) == abs_eval(P, x)


@pytest.mark.parametrize(
    "coeffs, n, sup, reg",
    [
        ((1, -1), 2, 1, 2),
        ((1, -1), 4, 1, 2),
        ((1, -1), 3, 2, 2),
        ((1, -1), 1, 2, 2),
        ((0, 0, 0), 2, 0, 0),
    ],
)
def test_two_point_norm_table(coeffs, n, sup, reg):
    P = OAPoly.from_coeffs(coeffs, n)
    assert sup_norm_poly(P) == sup
    assert reg_norm_poly(P) == reg
    assert sup_norm_bruteforce(P) == sup


@given(rationals, rationals, st.integers(1, 3))
def test_two_point_closed_forms(a1, a2, half):
    even = OAPoly(2 * half, measure(a1, a2))
    odd = OAPoly(2 * half - 1, measure(a1, a2))
    assert sup_norm_poly(even) == max(abs(a1), abs(a2), abs(a1 + a2))
    assert sup_norm_poly(odd) == abs(a1) + abs(a2)
    assert reg_norm_poly(even) == reg_norm_poly(odd) == abs(a1) + abs(a2)


@given(polys())
def test_bruteforce_matches_closed_form(P):
    assert sup_norm_bruteforce(P) == sup_norm_poly(P)
    assert reg_norm_poly(P) == var_norm(P.mu)


@given(polys())
def test_parity_dichotomy(P):
    sup, reg = sup_norm_poly(P), reg_norm_poly(P)
    if P.degree % 2:
        assert sup == reg
    else:
        assert sup <= reg <= 2 * sup
        assert sup == zero_norm(P.mu)


@given(polys())
def test_positive_polynomials(P):
    Q = abs_poly(P)
    assert sup_norm_poly(Q) == reg_norm_poly(Q) == abs_eval(Q, ones(Q.k)) == sum(Q.mu, Fraction(0))


@given(st.lists(rationals, min_size=1, max_size=5))
def test_degree_one_is_the_dual_of_sup_norm(mu):
    P = OAPoly(1, LatticeVector(tuple(mu), MEASURE))
    assert sup_norm_poly(P) == reg_norm_poly(P) == var_norm(P.mu)


def _local_sup_by_patterns(P, x):
    # |P(y)| over |y| <= x is maximised at y_i in {-x_i, x_i} (odd n)
    # or y_i in {0, x_i} (even n): a linear functional on a box in t = y^n
    levels = (-1, 1) if P.degree % 2 else (0, 1)
    return max(
        abs(P(vector(s * c for s, c in zip(signs, x)))) for signs in product(levels, repeat=x.k)
    )


@pytest.mark.parametrize(
    "coeffs, n, x, local, value, ratio",
    [
        ((1, -1), 2, (1, 1), 1, 2, 2),
        ((1, -1), 3, (1, 1), 2, 2, 1),
        ((2, 5), 4, (1, 3), 407, 407, 1),
    ],
)
def test_check_basic_examples(coeffs, n, x, local, value, ratio):
    P = OAPoly.from_coeffs(coeffs, n)
    rep = check_basic(P, function(*x))
    assert rep.local_sup == local == _local_sup_by_patterns(P, function(*x))
    assert rep.abs_value == value
    assert rep.ratio == ratio
    assert rep.to_json()["parity"] == ("odd" if n % 2 else "even")


@given(poly_and_point())
def test_local_sup_matches_pattern_scan(pair):
    P, x = pair
    assert local_sup(P, x) == _local_sup_by_patterns(P, x)


@given(poly_and_point())
def test_basic_estimate(pair):
    P, x = pair
    value, bound = abs_eval(P, x), local_sup(P, x)
    if P.degree % 2:
        assert value == bound
    else:
        assert value <= 2 * bound
    check_basic(P, x)


def test_check_basic_zero_ratio_is_none():
    rep = check_basic(OAPoly.from_coeffs([1, -1], 2), function(0, 0))
    assert rep.ratio is None


def test_local_sup_precondition():
    with pytest.raises(PreconditionError):
        local_sup(OAPoly.from_coeffs([1], 2), function(-1))


@pytest.mark.parametrize(
    "evaluator, expected",
    [
        (lambda x: x[0] ** 2 + x[1] ** 2, True),
        (lambda x: x[0] * x[1], False),
        (lambda x: (x[0] + x[1]) ** 2, False),
    ],
)
def test_blackbox_additivity_examples(evaluator, expected):
    assert is_orthogonally_additive_eval(evaluator, 2) is expected


@given(polys(max_k=4, max_n=4))
def test_blackbox_accepts_every_oapoly(P):
    assert is_orthogonally_additive_eval(P, P.k, trials=5)


def test_point_power_is_delta():
    assert OAPoly.point_power(3, 2, 4).mu == delta(3, 2)

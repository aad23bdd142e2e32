from fractions import Fraction
from itertools import product

import pytest

from oack.core import PreconditionError, delta, function, measure
from oack.expose import (
    exposes,
    exposing_witness,
    is_frechet,
    is_gateaux,
    norming_face,
    pair_peaking,
    peaking_function,
    poly_exposing_witness,
    strongly_exposes,
)
from oack.norms import d_norm
from oack.oapoly import OAPoly
from oack.polytope import predicted_extremes

H = Fraction(1, 2)
EPS = Fraction(1, 100)


def _unit_grid(k):
    vals = [Fraction(j, 4) for j in range(-4, 5)]
    return [function(*p) for p in product(vals, repeat=k) if d_norm(function(*p)) == 1]


def _gateaux_by_difference_quotients(x):
    # the norm is piecewise linear, so one small step gives the exact
    # one-sided derivative; smooth iff p(e_i) + p(-e_i) = 0 on a basis
    def p(h):
        return (d_norm(x + h.scale(EPS)) - d_norm(x)) / EPS

    grad = []
    for i in range(x.k):
        e = function(*(int(j == i) for j in range(x.k)))
        if p(e) + p(-e) != 0:
            return False, None
        grad.append(p(e))
    return True, measure(*grad)


@pytest.mark.parametrize(
    "x, size",
    [((1, H), 1), ((1, 1), 2), ((H, -H), 1), ((1, 0, 0), 3), ((1, 1, 0), 4), ((0, -1), 2)],
)
def test_norming_face_sizes(x, size):
    assert len(norming_face(function(*x))) == size


@pytest.mark.parametrize(
    "x, smooth, derivative",
    [
        ((1, H), True, (1, 0)),
        ((1, 1), False, None),
        ((H, -H), True, (1, -1)),
        ((-1, -H), True, (-1, 0)),
        ((1, 0), False, None),
        ((1,), True, (1,)),
        ((1, H, H), True, (1, 0, 0)),
    ],
)
def test_smoothness_examples(x, smooth, derivative):
    x = function(*x)
    expected = (smooth, None if derivative is None else measure(*derivative))
    assert is_gateaux(x) == expected
    assert is_frechet(x) == expected


@pytest.mark.parametrize("k", [1, 2, 3])
def test_gateaux_against_difference_quotients(k):
    for x in _unit_grid(k):
        assert is_gateaux(x) == _gateaux_by_difference_quotients(x)
        assert is_frechet(x) == is_gateaux(x)


def test_unit_precondition():
    with pytest.raises(PreconditionError):
        is_gateaux(function(2, 0))
    with pytest.raises(PreconditionError):
        is_frechet(measure(1, 0))
    with pytest.raises(PreconditionError):
        exposes(function(1, H), measure(H, H))


def test_exposes_examples():
    assert exposes(function(1, H), delta(2, 0))
    assert not exposes(function(1, 1), delta(2, 0))
    assert not exposes(function(1, H), delta(2, 1))
    assert strongly_exposes(function(H, -H), measure(1, -1))


def test_peaking_examples():
    assert peaking_function(3, 1) == function(H, 1, H)
    assert pair_peaking(3, 0, 2) == function(H, 0, -H)
    with pytest.raises(ValueError):
        pair_peaking(3, 1, 1)
    with pytest.raises(IndexError):
        peaking_function(2, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_every_extreme_point_has_a_witness(k):
    for mu in predicted_extremes("zero", k):
        x = exposing_witness(mu)
        assert d_norm(x) == 1
        assert exposes(x, mu) and strongly_exposes(x, mu)
        assert is_gateaux(x) == (True, mu)


def test_exposed_iff_smooth_with_that_derivative():
    extremes = list(predicted_extremes("zero", 2))
    for x in _unit_grid(2):
        smooth, derivative = is_gateaux(x)
        for mu in extremes:
            assert exposes(x, mu) == (smooth and derivative == mu)


def test_poly_witness():
    x = poly_exposing_witness(OAPoly(2, measure(0, 1, -1)))
    assert x == function(0, H, -H)
    with pytest.raises(PreconditionError):
        poly_exposing_witness(OAPoly(3, delta(2, 0)))

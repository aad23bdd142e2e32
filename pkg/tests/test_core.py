from fractions import Fraction

import pytest
from hypothesis import given

from oack.core import (
    DimensionError,
    PreconditionError,
    Space,
    delta,
    format_rational,
    from_json,
    function,
    is_disjoint,
    jordan_decompose,
    join,
    lattice_abs,
    measure,
    meet,
    ones,
    to_rational,
    total_mass,
    vector,
)

from .conftest import functions, vector_pairs


@pytest.mark.parametrize(
    "v, pos, neg",
    [
        ((3, -1, 0), (3, 0, 0), (0, 1, 0)),
        ((0, 0), (0, 0), (0, 0)),
        ((-2, 5), (0, 5), (2, 0)),
    ],
)
def test_jordan_examples(v, pos, neg):
    p, n = jordan_decompose(function(*v))
    assert p == function(*pos)
    assert n == function(*neg)


def test_jordan_keeps_role():
    p, n = jordan_decompose(measure(1, -1))
    assert p.role == n.role == "measure"


@given(functions)
def test_jordan_invariants(v):
    pos, neg = jordan_decompose(v)
    assert pos - neg == v
    assert meet(pos, neg).is_zero()
    assert lattice_abs(v) == pos + neg
    # Hahn positive set
    assert pos.support() == {i for i, c in enumerate(v) if c > 0}


def test_disjoint_examples():
    assert is_disjoint(function(1, 0, -2), function(0, 3, 0))
    assert not is_disjoint(function(1, 1), function(0, 1))
    assert lattice_abs(function(-2, 5)) == function(2, 5)


@given(vector_pairs())
def test_disjoint_iff_supports_disjoint(pair):
    v, w = pair
    by_index = all(a == 0 or b == 0 for a, b in zip(v, w))
    assert is_disjoint(v, w) == by_index
    assert is_disjoint(v, w) == (not (v.support() & w.support()))


@given(vector_pairs())
def test_meet_join_coordinatewise(pair):
    v, w = pair
    assert meet(v, w).coords == tuple(min(a, b) for a, b in zip(v, w))
    assert join(v, w).coords == tuple(max(a, b) for a, b in zip(v, w))
    assert meet(v, w) + join(v, w) == v + w


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        meet(function(1, 2), function(1, 2, 3))
    with pytest.raises(DimensionError):
        function(1) + function(1, 2)


@pytest.mark.parametrize("mu, mass", [((3, -1), 2), ((1, -1), 0), ((0, 0, 0), 0)])
def test_total_mass(mu, mass):
    assert total_mass(measure(*mu)) == mass


def test_total_mass_needs_measure():
    with pytest.raises(PreconditionError):
        total_mass(function(1, 2))


def test_delta_and_ones():
    assert delta(3, 1) == measure(0, 1, 0)
    assert ones(2) == function(1, 1)
    with pytest.raises(IndexError):
        delta(2, 2)


def test_rational_serialization_roundtrip():
    v = vector(["3/6", -2, Fraction(7, 3)])
    assert v.to_json() == ["1/2", "-2", "7/3"]
    assert from_json(v.to_json()) == v
    assert format_rational(Fraction(4, 2)) == "2"


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(ValueError):
        to_rational("x/2")


def test_space_validation():
    assert list(Space(3).points()) == [0, 1, 2]
    with pytest.raises(ValueError):
        Space(0)


def test_vectors_are_immutable():
    v = function(1, 2)
    with pytest.raises(Exception):
        v.coords = (Fraction(0),)

#!/usr/bin/env python
# coding: UTF-8

from hypothesis import assume, given, settings
from hypothesis import strategies as st
import pytest

from orbitquant.errors import (InvalidInputError, NotDecreasing, ParityViolation, RankMismatch,
                               TotalParityMismatch, WrongTotalParity)
from orbitquant.orbits import (KIND_ANY, KIND_B, KIND_C, Partition, collapse, jm_h, lambda_of, ls_dual,
                               spherical_params, spherical_partition, transpose, validate)
from orbitquant.weights import Weight

partitions = st.lists(st.integers(1, 7), min_size=1, max_size=9).map(lambda xs: tuple(sorted(xs, reverse=True)))


def dominated_by(lower: tuple[int, ...], upper: tuple[int, ...]) -> bool:
    """Dominance order of partitions of the same total."""
    width = max(len(lower), len(upper))
    a = list(lower) + [0] * (width - len(lower))
    b = list(upper) + [0] * (width - len(upper))
    return all(sum(a[:k]) <= sum(b[:k]) for k in range(1, width + 1))


def test_validate_accepts_type_c():
    p = validate([2, 2, 1, 1], KIND_C)
    assert p.parts == (2, 2, 1, 1)
    assert p.kind == KIND_C
    assert p.total == 6


def test_validate_errors():
    with pytest.raises(NotDecreasing):
        validate([1, 2], KIND_C)

    with pytest.raises(WrongTotalParity):
        validate([2, 1], KIND_C)

    with pytest.raises(WrongTotalParity):
        validate([2, 2], KIND_B)

    with pytest.raises(InvalidInputError):
        validate([2, 0], KIND_C)


def test_parity_violation_reports_largest_part():
    with pytest.raises(ParityViolation) as excinfo:
        validate([3, 1], KIND_C)

    assert excinfo.value.part == 3
    assert isinstance(excinfo.value, ValueError)


def test_from_string_exponents():
    assert Partition.from_string("2^2,1^2").parts == (2, 2, 1, 1)
    assert Partition.from_string("4, 4, 3, 3").parts == (4, 4, 3, 3)

    with pytest.raises(InvalidInputError):
        Partition.from_string("2,x")


def test_transpose():
    assert transpose(Partition((4, 2, 1))).parts == (3, 2, 1, 1)
    assert transpose(Partition((1, 1, 1))).parts == (3,)


@given(partitions)
def test_transpose_is_involution(parts):
    p = Partition(parts)
    assert transpose(transpose(p)).parts == p.parts
    assert transpose(p).total == p.total


@given(partitions)
def test_collapse_b(parts):
    assume(sum(parts) % 2 == 1)

    c = collapse(Partition(parts), KIND_B)

    validate(c.parts, KIND_B)
    assert c.total == sum(parts)
    assert dominated_by(c.parts, parts)
    assert collapse(c, KIND_B) == c


@given(partitions)
def test_collapse_c(parts):
    assume(sum(parts) % 2 == 0)

    c = collapse(Partition(parts), KIND_C)

    validate(c.parts, KIND_C)
    assert dominated_by(c.parts, parts)
    assert collapse(c, KIND_C) == c


def test_collapse_total_parity():
    with pytest.raises(TotalParityMismatch):
        collapse(Partition((2, 2)), KIND_B)


def test_ls_dual_anchors(resources):
    assert ls_dual(validate((2, 2, 1, 1), KIND_C)).parts == (5, 1, 1)
    assert ls_dual(validate(resources["example_orbit"], KIND_C)).parts == resources["example_dual"]
    assert ls_dual(validate((2, 2), KIND_C)).parts == (3, 1, 1)


@settings(max_examples=50)
@given(partitions)
def test_ls_dual_is_type_b(parts):
    assume(sum(parts) % 2 == 0)
    p = collapse(Partition(parts, KIND_ANY), KIND_C)

    d = ls_dual(p)

    assert d.kind == KIND_B
    assert d.total == p.total + 1


def test_jm_h():
    assert jm_h(Partition((2, 2)), 2) == Weight.of(1, 1)
    assert jm_h(Partition((2, 2, 1, 1)), 3) == Weight.of(1, 1, 0)
    assert jm_h(Partition((5, 1, 1)), 3) == Weight.of(4, 2, 0)

    with pytest.raises(RankMismatch):
        jm_h(Partition((2, 2)), 5)


def test_lambda_of(resources):
    desc = lambda_of(validate((2, 2, 1, 1), KIND_C))
    assert desc.rank == 3
    assert desc.dual.parts == (5, 1, 1)
    assert desc.h_dual == Weight.of(4, 2, 0)
    assert desc.lambda_O == Weight.of(2, 1, 0)

    example = lambda_of(validate(resources["example_orbit"], KIND_C))
    assert example.rank == 10
    assert example.h_dual == Weight.from_coords(resources["example_max"])

    d = desc.to_dict()
    assert d["lambda_O"] == ["2", "1", "0"]
    assert d["dual"] == [5, 1, 1]


@pytest.mark.parametrize("p", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [0, 1, 2, 3, 4])
def test_spherical_family(p, q):
    orbit = spherical_partition(p, q)
    n = 2 * p + q
    desc = lambda_of(orbit)

    assert ls_dual(orbit).parts == (2 * p + 2 * q + 1, 2 * p - 1, 1)
    assert jm_h(orbit, n) == Weight.from_coords((1,) * (2 * p) + (0,) * q)

    # (p+q, ..., 1) merged with (p-1, ..., 0)
    lam = sorted(list(range(1, p + q + 1)) + list(range(0, p)), reverse=True)
    assert desc.lambda_O == Weight.from_coords(lam)
    assert desc.h_dual == Weight.from_coords([2 * x for x in lam])


def test_spherical_params():
    assert spherical_params(Partition((2, 2, 1, 1))) == (1, 1)
    assert spherical_params(Partition((2, 2, 2, 2))) == (2, 0)
    assert spherical_params(Partition((2, 1, 1))) is None
    assert spherical_params(Partition((4,))) is None
    assert spherical_params(Partition((1, 1))) is None

    assert spherical_partition(1, 2).parts == (2, 2, 1, 1, 1, 1)
    assert lambda_of(spherical_partition(2, 1)).spherical_params() == (2, 1)

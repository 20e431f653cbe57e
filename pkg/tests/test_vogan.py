#!/usr/bin/env python
# coding: UTF-8

from hypothesis import given
from hypothesis import strategies as st
import pytest

from orbitquant.catalog import Catalog
from orbitquant.errors import HalfIntegralSupport, NotDominant, NotInCatalog, RankMismatch
from orbitquant.orbits import KIND_C, lambda_of, spherical_partition, validate
from orbitquant.vchar import VirtualCharacter, unipotent_pair
from orbitquant.vogan import (TAG_COVER, TAG_MINUS, TAG_PLUS, gamma, parity_split_check, root_order_leq,
                              support_maxima, theorem_c_closed_form, verify_achar_sommers)
from orbitquant.weights import Weight
from orbitquant.weyl import SubgroupSpec

dominant3 = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(
    lambda xs: Weight.from_coords(sorted(xs, reverse=True)))

FAMILY_RANK5 = [(1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)]


def test_root_order_examples():
    assert root_order_leq(Weight.of(0, 0), Weight.of(1, 1))
    assert root_order_leq(Weight.of(6, 4, 1, 1), Weight.of(6, 4, 2, 0))
    assert root_order_leq(Weight.of(1, 1), Weight.of(2, 0))
    assert not root_order_leq(Weight.of(2, 0), Weight.of(1, 1))


def test_root_order_errors():
    with pytest.raises(RankMismatch):
        root_order_leq(Weight.of(0, 0), Weight.of(1, 1, 0))

    with pytest.raises(NotDominant):
        root_order_leq(Weight.of(0, 1), Weight.of(1, 1))

    with pytest.raises(HalfIntegralSupport):
        root_order_leq(Weight.of("1/2", "1/2"), Weight.of(1, 1))


@given(dominant3)
def test_root_order_reflexive(a):
    assert root_order_leq(a, a)


@given(dominant3, dominant3)
def test_root_order_antisymmetric(a, b):
    if root_order_leq(a, b) and root_order_leq(b, a):
        assert a == b


@given(dominant3, dominant3, dominant3)
def test_root_order_transitive(a, b, c):
    if root_order_leq(a, b) and root_order_leq(b, c):
        assert root_order_leq(a, c)


def test_support_maxima(pair22):
    x_plus, x_minus = pair22

    assert support_maxima(x_plus) == [Weight.of(1, 1)]
    assert support_maxima(x_plus + x_minus) == [Weight.of(2, 0)]
    assert support_maxima(VirtualCharacter.zero(2)) == []


def test_support_maxima_incomparable():
    chi = VirtualCharacter.ind(Weight.of(1, 0, 0)) + VirtualCharacter.ind(Weight.of(1, 1, 0))
    assert support_maxima(chi) == [Weight.of(1, 0, 0), Weight.of(1, 1, 0)]


def test_theorem_c_closed_form():
    assert theorem_c_closed_form(1, 1) == Weight.of(4, 2, 0)
    assert theorem_c_closed_form(1, 2) == Weight.of(6, 4, 1, 1)
    assert theorem_c_closed_form(2, 0) == Weight.of(3, 3, 1, 1)
    assert theorem_c_closed_form(1, 0) == Weight.of(1, 1)
    assert theorem_c_closed_form(2, 1) == Weight.of(6, 4, 2, 2, 0)


def test_gamma_plus():
    c = gamma(validate((2, 2, 1, 1), KIND_C), TAG_PLUS)
    assert c.passed
    assert c.gamma == Weight.of(4, 2, 0)
    assert c.norm_check is True

    c = gamma(validate((2, 2, 1, 1, 1, 1), KIND_C), TAG_PLUS)
    assert c.passed
    assert c.gamma == Weight.of(6, 4, 1, 1)
    assert c.gamma != lambda_of(c.orbit).h_dual

    c = gamma(validate((2, 2), KIND_C), TAG_PLUS)
    assert c.gamma == Weight.of(1, 1)


def test_gamma_cover_and_minus():
    c = gamma(validate((2, 2), KIND_C), TAG_COVER)
    assert c.passed
    assert c.gamma == Weight.of(2, 0)
    assert c.support_size == 2

    c = gamma(validate((2, 2), KIND_C), TAG_MINUS)
    assert c.expected == Weight.of(2, 0)
    assert c.passed


def test_gamma_minus_q_odd():
    orbit = validate((2, 2, 1, 1), KIND_C)
    c = gamma(orbit, TAG_MINUS)

    assert c.expected is None
    assert c.passed
    assert c.gamma == Weight.of(4, 1, 1)
    assert c.norm_check is True

    _, x_minus = unipotent_pair(orbit)
    assert x_minus.coefficient(lambda_of(orbit).h_dual) == 0


def test_gamma_not_in_catalog():
    with pytest.raises(NotInCatalog):
        gamma(validate((4,), KIND_C), TAG_PLUS)


@pytest.mark.parametrize("p, q", FAMILY_RANK5)
def test_gamma_plus_family(p, q):
    c = gamma(spherical_partition(p, q), TAG_PLUS)
    assert c.passed
    assert c.gamma == theorem_c_closed_form(p, q)


@pytest.mark.parametrize("p, q", FAMILY_RANK5)
def test_two_lambda_in_x_plus_iff_q_odd(p, q):
    orbit = spherical_partition(p, q)
    x_plus, _ = unipotent_pair(orbit)

    present = x_plus.coefficient(lambda_of(orbit).h_dual) != 0
    assert present == (q % 2 == 1)
    assert parity_split_check(p, q) == present


@pytest.mark.parametrize("p, q", FAMILY_RANK5)
def test_verify_achar_sommers_family(p, q):
    c = verify_achar_sommers(spherical_partition(p, q))

    assert c.passed
    assert c.maxima == (lambda_of(c.orbit).h_dual,)
    assert c.witness["match"] is True


def test_verify_achar_sommers_examples():
    c = verify_achar_sommers(validate((2, 2, 1, 1), KIND_C))
    assert c.gamma == Weight.of(4, 2, 0)

    c = verify_achar_sommers(validate((2, 2), KIND_C))
    assert c.gamma == Weight.of(2, 0)
    assert c.witness == {"spec": "D1xC1", "coefficient": "-1", "det_w0": -1, "match": True}


def test_verify_achar_sommers_override():
    c = verify_achar_sommers(validate((2, 2), KIND_C), spec_override=SubgroupSpec.parse("D2"))
    assert c.passed
    assert c.witness["coefficient"] == "1"

    with pytest.raises(RankMismatch):
        verify_achar_sommers(validate((2, 2), KIND_C), spec_override=SubgroupSpec.parse("D3"))


@pytest.mark.slow
def test_verify_achar_sommers_sp20(catalog, resources):
    c = verify_achar_sommers(validate(resources["example_orbit"], KIND_C), catalog=catalog)

    assert c.passed
    assert c.maxima == (Weight.from_coords(resources["example_max"]),)


def test_parity_split_check():
    assert parity_split_check(1, 1)
    assert not parity_split_check(1, 2)
    assert not parity_split_check(2, 0)

    for p in range(1, 5):
        for q in range(0, 5):
            assert parity_split_check(p, q) == (q % 2 == 1)


def test_certificate_dict():
    d = gamma(validate((2, 2), KIND_C), TAG_PLUS, catalog=Catalog.load_embedded()).to_dict()

    assert d["orbit"] == [2, 2]
    assert d["tag"] == "plus"
    assert d["maxima"] == [["1", "1"]]
    assert d["gamma"] == ["1", "1"]
    assert d["verdict"] == "pass"
    assert "witness" not in d

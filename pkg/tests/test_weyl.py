#!/usr/bin/env python
# coding: UTF-8

from hypothesis import given
from hypothesis import strategies as st
import pytest

from orbitquant.errors import InvalidSubgroupSpec, RankMismatch
from orbitquant.weights import Weight
from orbitquant.weyl import (SignedPermutation, SubgroupSpec, act, arrangement, det_sign, dominates,
                             element_arrays, enumerate_elements, length, longest_element, positive_roots, rho)


@st.composite
def signed_permutations(draw, n=4):
    perm = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


weights4 = st.lists(st.integers(-6, 6), min_size=4, max_size=4).map(Weight.from_coords)


def test_parse_spec():
    spec = SubgroupSpec.parse("D3xC2")
    assert spec.factors == (("D", 3), ("C", 2))
    assert SubgroupSpec.parse("D_3 x C_2") == spec
    assert SubgroupSpec.parse("D3×C2") == spec
    assert str(spec) == "D3xC2"
    assert spec.ambient_rank == 5
    assert spec.offsets == (0, 3)

    with pytest.raises(InvalidSubgroupSpec):
        SubgroupSpec.parse("E3")

    with pytest.raises(RankMismatch):
        SubgroupSpec.parse("D3xC2", ambient_rank=4)


def test_spec_order():
    assert SubgroupSpec.parse("D3xC2").order == 24 * 8
    assert SubgroupSpec.parse("D1xC1").order == 2
    assert SubgroupSpec.parse("D0xC2").order == 8
    assert SubgroupSpec.parse("A3").order == 6
    assert SubgroupSpec.parse("C4xD3xC2xD1").order == 73728


@pytest.mark.parametrize("text", ["D2xC1xA2", "D1xC1", "D2xC0", "D1xC2", "D3xC0", "D1xC3", "D4xC0",
                                  "D2xC2", "D5xC1", "D2xC3", "D4xC1", "C4xD3xC2xD1"])
def test_enumerate_elements_are_distinct(text):
    spec = SubgroupSpec.parse(text)
    elements = list(enumerate_elements(spec))

    assert len(elements) == spec.order
    assert len(set(elements)) == spec.order
    assert all(w.rank == spec.ambient_rank for w in elements)


def test_d_factor_has_even_sign_changes():
    for w in enumerate_elements(SubgroupSpec.parse("D3")):
        assert w.signs.count(-1) % 2 == 0


def test_element_arrays_dets():
    spec = SubgroupSpec.parse("D2xC1xA2")
    perms, signs, dets = element_arrays(spec)

    assert perms.shape == (spec.order, 5)
    for perm, sign, d in zip(perms, signs, dets):
        assert det_sign(SignedPermutation.from_arrays(perm, sign)) == d


def test_act_and_compose():
    w = SignedPermutation((2, -1))
    v = Weight.of(3, 5)

    assert act(w, v) == Weight.of(5, -3)
    assert act(w * w, v) == Weight.of(-3, -5)

    with pytest.raises(RankMismatch):
        act(w, Weight.of(1, 2, 3))


@given(signed_permutations(), signed_permutations(), weights4)
def test_compose_is_action(u, v, x):
    assert act(u * v, x) == act(u, act(v, x))


@given(signed_permutations(), weights4)
def test_act_preserves_norm(w, x):
    assert act(w, x).norm2() == x.norm2()


@given(signed_permutations(), signed_permutations())
def test_det_sign_is_homomorphism(u, v):
    assert det_sign(u * v) == det_sign(u) * det_sign(v)


@given(signed_permutations())
def test_inverse(w):
    identity = SignedPermutation.identity(4)
    assert w * w.inverse() == identity
    assert w.inverse() * w == identity


@given(signed_permutations())
def test_det_sign_is_length_parity(w):
    assert det_sign(w) == (-1) ** length(w, "C")


def test_positive_roots():
    assert len(positive_roots(3, "C")) == 9
    assert len(positive_roots(3, "D")) == 6
    assert len(positive_roots(3, "A")) == 3
    assert (0, 0, 2) in positive_roots(3, "C")


def test_longest_elements():
    assert length(longest_element(SubgroupSpec.parse("C3")), "C") == 9
    assert length(longest_element(SubgroupSpec.parse("D4")), "D") == 12
    assert length(longest_element(SubgroupSpec.parse("D3")), "D") == 6
    assert length(longest_element(SubgroupSpec.parse("A3")), "A") == 3

    assert longest_element(SubgroupSpec.parse("D3")).images == (-1, -2, 3)
    assert longest_element(SubgroupSpec.parse("D1xC1")).images == (1, -2)


def test_arrangement():
    assert arrangement(SubgroupSpec.parse("D1xC1")) == Weight.of(0, 1)
    assert arrangement(SubgroupSpec.parse("D2")) == Weight.of(1, 0)
    assert arrangement(SubgroupSpec.parse("D3xC2")) == Weight.of(2, 1, 0, 2, 1)
    assert arrangement(SubgroupSpec.parse("A2")) == Weight.of("1/2", "-1/2")
    assert arrangement(SubgroupSpec.parse("A3")) == Weight.of(1, 0, -1)


def test_longest_element_negates_arrangement():
    for text in ("D1xC2", "D3xC0", "D2xC2", "C4xD3xC2xD1"):
        spec = SubgroupSpec.parse(text)
        lam = arrangement(spec)
        assert act(longest_element(spec), lam) == -lam


def test_rho_and_dominates():
    assert rho(3) == (3, 2, 1)

    assert dominates((0, 0), (1, 1))
    assert dominates((1, 1), (2, 0))
    assert not dominates((2, 0), (1, 1))
    assert dominates((6, 4, 1, 1), (6, 4, 2, 0))
    assert not dominates((0, 0), (1, 0))

#!/usr/bin/env python
# coding: UTF-8

from fractions import Fraction

import pytest

from orbitquant.catalog import catalog_lookup
from orbitquant.errors import MissingSpec, RankMismatch, WrongFamily
from orbitquant.orbits import KIND_C, spherical_partition, validate
from orbitquant.vchar import (VirtualCharacter, denominator_sum, dominant_rep, mcgovern_character, r_e, r_x,
                              richardson_sum, tag_character, unipotent_pair, x_pi)
from orbitquant.weights import Weight
from orbitquant.weyl import SubgroupSpec, arrangement


def ind(*coords) -> VirtualCharacter:
    return VirtualCharacter.ind(Weight.from_coords(coords))


def test_dominant_rep():
    assert dominant_rep(Weight.of(0, -3, 2)) == Weight.of(3, 2, 0)
    assert dominant_rep(Weight.of(1, -1)) == Weight.of(1, 1)
    assert dominant_rep(Weight.of(3, 2, 0)) == Weight.of(3, 2, 0)


def test_from_terms_canonicalizes():
    chi = VirtualCharacter.from_terms(2, [(Weight.of(0, -2), 1), (Weight.of(2, 0), 1), (Weight.of(1, 1), 0)])

    assert chi.terms == {Weight.of(2, 0): Fraction(2)}
    assert all(w.is_dominant() for w in chi.support())


def test_arithmetic():
    a = ind(0, 0) - ind(1, 1)

    assert len(a.scale(0)) == 0
    assert len(a + (-1) * a) == 0
    assert (a * 2).coefficient(Weight.of(1, -1)) == -2
    assert a.equals(ind(0, 0) + ind(1, 1) * -1)

    with pytest.raises(RankMismatch):
        a + ind(0, 0, 0)


def test_r_x_sp4():
    assert r_x(Weight.of(0, 1), SubgroupSpec.parse("D1xC1")) == ind(0, 0) - ind(2, 0)
    assert r_x(Weight.of(1, 0), SubgroupSpec.parse("D2")) == ind(0, 0) - ind(1, 1) * 2 + ind(2, 0)


def test_r_x_rank_mismatch():
    with pytest.raises(RankMismatch):
        r_x(Weight.of(1, 0), SubgroupSpec.parse("D3"))


def test_r_x_identity_term():
    for p, q in [(1, 0), (1, 1), (2, 0), (1, 2)]:
        entry = catalog_lookup(spherical_partition(p, q))
        for spec in entry.specs.values():
            chi = r_x(arrangement(spec), spec)
            assert chi.coefficient(Weight.zero(2 * p + q)) == 1


def test_unipotent_pair_sp4(pair22):
    x_plus, x_minus = pair22

    assert x_plus == ind(0, 0) - ind(1, 1)
    assert x_minus == ind(1, 1) - ind(2, 0)
    assert x_minus.support() == [Weight.of(1, 1), Weight.of(2, 0)]


def test_unipotent_pair_sums_to_r_e(resources):
    for p, q in resources["family_desk"] + [(1, 3)]:
        orbit = spherical_partition(p, q)
        x_plus, x_minus = unipotent_pair(orbit)

        assert x_plus + x_minus == r_e(catalog_lookup(orbit))
        assert x_plus.has_integral_coefficients()
        assert x_minus.has_integral_coefficients()


def test_unipotent_pair_lowest_term():
    x_plus, _ = unipotent_pair(validate((2, 2, 1, 1), KIND_C))
    assert x_plus.coefficient(Weight.zero(3)) == 1


def test_unipotent_pair_wrong_family():
    with pytest.raises(WrongFamily):
        unipotent_pair(validate((4,), KIND_C))


def test_x_pi_missing_spec(catalog, resources):
    entry = catalog_lookup(validate(resources["example_orbit"], KIND_C), catalog)

    with pytest.raises(MissingSpec):
        x_pi(entry, tag_character("minus", entry.abar_rank))


def test_tag_character():
    assert tag_character("plus", 1) == (0,)
    assert tag_character("minus", 1) == (1,)
    assert tag_character("minus", 2) == (1, 1)

    with pytest.raises(ValueError):
        tag_character("cover", 1)

    assert tag_character("plus", 0) == ()

    with pytest.raises(MissingSpec):
        tag_character("minus", 0)


def test_mcgovern_sp4(pair22):
    x_plus, _ = pair22
    assert mcgovern_character(validate((2, 2), KIND_C)) == x_plus


def test_mcgovern_principal():
    for n in (1, 2, 3):
        assert mcgovern_character(validate((2 * n,), KIND_C)) == VirtualCharacter.ind(Weight.zero(n))


def test_mcgovern_zero_orbit_is_denominator_sum():
    for n in (1, 2, 3):
        assert mcgovern_character(validate((1,) * (2 * n), KIND_C)) == denominator_sum(n)


def test_denominator_sum_sp2():
    # Ind(0) - Ind(2)
    assert denominator_sum(1) == ind(0) - ind(2)


def test_richardson_sum_matches_x_plus():
    for p in (1, 2):
        x_plus, _ = unipotent_pair(spherical_partition(p, 0))
        assert x_plus == richardson_sum(p)


def test_records_order(pair22):
    x_plus, _ = pair22

    assert x_plus.to_records() == [
        {"weight": ["1", "1"], "coeff": "-1"},
        {"weight": ["0", "0"], "coeff": "1"},
    ]
    assert str(x_plus) == "-1*Ind(1,1) + 1*Ind(0,0)"


def test_max_norm_terms(pair22):
    x_plus, x_minus = pair22

    assert x_plus.max_norm_terms() == [Weight.of(1, 1)]
    assert (x_plus + x_minus).max_norm_terms() == [Weight.of(2, 0)]
    assert VirtualCharacter.zero(2).max_norm_terms() == []

#!/usr/bin/env python
# coding: UTF-8

from orbitquant.orbits import KIND_C, spherical_partition, validate
from orbitquant.utils import format_fraction
from orbitquant.vchar import denominator_sum, mcgovern_character, richardson_sum, unipotent_pair
from orbitquant.weights import Weight
from .base_suite import FAMILY_DESK, BaseSuite, T_Certificate, verdict


class Prop33Suite(BaseSuite):
    """Lowest terms of X^+ and X^-."""
    name = "prop33"

    @classmethod
    def default_instances(cls) -> list[tuple[int, int]]:
        return list(FAMILY_DESK)

    def check(self, instance: tuple[int, int]) -> T_Certificate:
        p, q = instance
        n = 2 * p + q
        orbit = spherical_partition(p, q)

        x_plus, x_minus = unipotent_pair(orbit, catalog=self.catalog, verbose=self.verbose)

        def ones(k: int) -> Weight:
            return Weight.from_coords((1,) * k + (0,) * (n - k))

        coeff_zero = x_plus.coefficient(Weight.zero(n))
        coeff_lowest = x_minus.coefficient(ones(2 * p))
        coeff_below = {str(ones(2 * i)): format_fraction(x_minus.coefficient(ones(2 * i))) for i in range(p)}

        ok = (coeff_zero == 1
              and coeff_lowest == 1
              and all(x_minus.coefficient(ones(2 * i)) == 0 for i in range(p))
              and x_plus.has_integral_coefficients()
              and x_minus.has_integral_coefficients())

        return {
            "p": p,
            "q": q,
            "orbit": list(orbit.parts),
            "plus_coeff_of_zero": format_fraction(coeff_zero),
            "minus_coeff_of_lowest": format_fraction(coeff_lowest),
            "minus_coeffs_below": coeff_below,
            "integral_coefficients": x_plus.has_integral_coefficients() and x_minus.has_integral_coefficients(),
            "verdict": verdict(ok),
        }


class Lemma44Suite(BaseSuite):
    """X^+ of (2^{2p}) against the alternating sum over S_{2p}."""
    name = "lemma44"

    @classmethod
    def default_instances(cls) -> list[int]:
        return [1, 2]

    def check(self, instance: int) -> T_Certificate:
        p = instance
        orbit = spherical_partition(p, 0)

        x_plus, _ = unipotent_pair(orbit, catalog=self.catalog, verbose=self.verbose)
        expected = richardson_sum(p)
        difference = x_plus - expected

        return {
            "p": p,
            "orbit": list(orbit.parts),
            "support_size": len(x_plus),
            "difference": difference.to_records(),
            "verdict": verdict(len(difference) == 0),
        }


class DenominatorSuite(BaseSuite):
    """McGovern's product for the zero orbit against the Weyl denominator sum."""
    name = "denominator"

    @classmethod
    def default_instances(cls) -> list[int]:
        return [1, 2, 3]

    def check(self, instance: int) -> T_Certificate:
        n = instance
        orbit = validate((1,) * (2 * n), KIND_C)

        product = mcgovern_character(orbit)
        alternating = denominator_sum(n)
        difference = product - alternating

        return {
            "n": n,
            "orbit": list(orbit.parts),
            "support_size": len(product),
            "difference": difference.to_records(),
            "verdict": verdict(len(difference) == 0),
        }

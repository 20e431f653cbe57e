#!/usr/bin/env python
# coding: UTF-8

from orbitquant.orbits import KIND_C, lambda_of, spherical_partition, validate
from orbitquant.utils import format_fraction
from orbitquant.vchar import unipotent_pair
from orbitquant.vogan import TAG_PLUS, certify, parity_split_check, theorem_c_closed_form, verify_achar_sommers
from .base_suite import FAMILY_RANK5, BaseSuite, T_Certificate, verdict

EXAMPLE_ORBIT = (4, 4, 3, 3, 2, 2, 1, 1)


class TheoremCSuite(BaseSuite):
    """Maximal term of X^+ against its closed form, and presence of Ind(2 lambda_O) in X^+."""
    name = "theoremC"

    @classmethod
    def default_instances(cls) -> list[tuple[int, int]]:
        return list(FAMILY_RANK5)

    def check(self, instance: tuple[int, int]) -> T_Certificate:
        p, q = instance
        orbit = spherical_partition(p, q)
        two_lambda = lambda_of(orbit).h_dual

        x_plus, _ = unipotent_pair(orbit, catalog=self.catalog, verbose=self.verbose)
        certificate = certify(orbit, TAG_PLUS, x_plus, theorem_c_closed_form(p, q), verbose=self.verbose)

        coeff = x_plus.coefficient(two_lambda)
        present = coeff != 0

        return {
            **certificate.to_dict(),
            "p": p,
            "q": q,
            "two_lambda_O": two_lambda.to_strings(),
            "two_lambda_O_coeff": format_fraction(coeff),
            "two_lambda_O_present": present,
            "verdict": verdict(certificate.passed and present == (q % 2 == 1)),
        }


class TheoremDSuite(BaseSuite):
    """Maximal term of R_e is 2 lambda_O for the spherical family."""
    name = "theoremD"

    @classmethod
    def default_instances(cls) -> list[tuple[int, int]]:
        return list(FAMILY_RANK5)

    def check(self, instance: tuple[int, int]) -> T_Certificate:
        p, q = instance
        certificate = verify_achar_sommers(spherical_partition(p, q), catalog=self.catalog, verbose=self.verbose)

        return {"p": p, "q": q, **certificate.to_dict()}


class Example52Suite(BaseSuite):
    """Maximal term of R_e for (4,4,3,3,2,2,1,1) in Sp(20), from the catalog."""
    name = "example52"

    @classmethod
    def default_instances(cls) -> list[tuple[int, ...]]:
        return [EXAMPLE_ORBIT]

    def check(self, instance: tuple[int, ...]) -> T_Certificate:
        orbit = validate(instance, KIND_C)
        certificate = verify_achar_sommers(orbit, catalog=self.catalog, verbose=self.verbose)

        return {"dual": list(lambda_of(orbit).dual.parts), **certificate.to_dict()}


class Prop42Suite(BaseSuite):
    """Parity of the longest elements decides whether Ind(2 lambda_O) survives in X^+."""
    name = "prop42"

    @classmethod
    def default_instances(cls) -> list[tuple[int, int]]:
        return [(p, q) for p in range(1, 5) for q in range(0, 5)]

    def check(self, instance: tuple[int, int]) -> T_Certificate:
        p, q = instance
        survives = parity_split_check(p, q)

        return {
            "p": p,
            "q": q,
            "survives": survives,
            "q_odd": q % 2 == 1,
            "verdict": verdict(survives == (q % 2 == 1)),
        }

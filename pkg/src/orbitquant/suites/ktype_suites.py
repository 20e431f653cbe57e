#!/usr/bin/env python
# coding: UTF-8

from orbitquant.ktypes import (VARIANT_COVER_EXTRA, VARIANT_PLAIN, closed_form_decomposition, decompose)
from orbitquant.orbits import spherical_partition
from orbitquant.vchar import VirtualCharacter, mcgovern_character, unipotent_pair
from .base_suite import FAMILY_DESK, BaseSuite, T_Certificate, verdict


class TheoremBSuite(BaseSuite):
    """Regular functions on the orbit and its cover from X^+, X^- and McGovern's product."""
    name = "theoremB"

    @classmethod
    def default_instances(cls) -> list[tuple[int, int]]:
        return list(FAMILY_DESK)

    def _compare(self, label: str, chi: VirtualCharacter, expected: dict) -> dict:
        dec = decompose(chi, self.bound, cache=self.freudenthal, threads=self.threads, verbose=self.verbose)
        mismatches = dec.mismatches(expected)

        return {
            "name": label,
            "scanned": len(dec),
            "nonzero": len(dec.nonzero()),
            "mismatches": mismatches,
        }

    def check(self, instance: tuple[int, int]) -> T_Certificate:
        p, q = instance
        orbit = spherical_partition(p, q)

        x_plus, x_minus = unipotent_pair(orbit, catalog=self.catalog, verbose=self.verbose)
        plain = closed_form_decomposition(orbit, self.bound, (VARIANT_PLAIN,))
        cover = closed_form_decomposition(orbit, self.bound, (VARIANT_PLAIN, VARIANT_COVER_EXTRA))

        checks = [
            self._compare("X+ vs plain", x_plus, plain),
            self._compare("X+ + X- vs plain + cover-extra", x_plus + x_minus, cover),
            self._compare("mcgovern vs plain", mcgovern_character(orbit), plain),
        ]

        return {
            "p": p,
            "q": q,
            "orbit": list(orbit.parts),
            "bound": self.bound,
            "checks": checks,
            "verdict": verdict(all(len(c["mismatches"]) == 0 for c in checks)),
        }

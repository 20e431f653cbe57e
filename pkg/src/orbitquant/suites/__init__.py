#!/usr/bin/env python
# coding: UTF-8

from .base_suite import BaseSuite, select_family
from .character_suites import DenominatorSuite, Lemma44Suite, Prop33Suite
from .gamma_suites import Example52Suite, Prop42Suite, TheoremCSuite, TheoremDSuite
from .ktype_suites import TheoremBSuite

SUITES: dict[str, type[BaseSuite]] = {
    suite.name: suite
    for suite in (TheoremBSuite, TheoremCSuite, TheoremDSuite, Lemma44Suite,
                  Prop33Suite, Prop42Suite, Example52Suite, DenominatorSuite)
}

# suites whose instances are (p, q) pairs of the (2^{2p} 1^{2q}) family
FAMILY_SUITES = ("theoremB", "theoremC", "theoremD", "prop33", "prop42")

__all__ = ["BaseSuite", "select_family", "SUITES", "FAMILY_SUITES",
           "TheoremBSuite", "TheoremCSuite", "TheoremDSuite", "Lemma44Suite",
           "Prop33Suite", "Prop42Suite", "Example52Suite", "DenominatorSuite"]

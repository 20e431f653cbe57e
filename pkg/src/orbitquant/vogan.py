#!/usr/bin/env python
# coding: UTF-8

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
import sys

import numpy as np

from orbitquant.catalog import Catalog, catalog_lookup
from orbitquant.errors import HalfIntegralSupport, InvalidSubgroupSpec, MissingSpec, NotDominant, RankMismatch
from orbitquant.orbits import Partition, lambda_of, spherical_params
from orbitquant.utils import format_fraction
from orbitquant.vchar import VirtualCharacter, r_e, r_x, tag_character, x_pi
from orbitquant.weights import Weight
from orbitquant.weyl import SubgroupSpec, arrangement, det_sign, dominates, longest_element

TAG_PLUS = "plus"
TAG_MINUS = "minus"
TAG_COVER = "cover"

CHARACTER_TAGS = (TAG_PLUS, TAG_MINUS, TAG_COVER)

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"

# rows of the pairwise comparison evaluated at once
COMPARE_CHUNK = 256


def root_order_leq(mu: Weight, la: Weight) -> bool:
    """mu <= la in the root order of C_n."""
    if mu.rank != la.rank:
        raise RankMismatch(f"rank {mu.rank} != rank {la.rank}")

    for w in (mu, la):
        if not w.is_integral():
            raise HalfIntegralSupport(f"{w} is not integral")
        if not w.is_dominant():
            raise NotDominant(f"{w} is not dominant")

    return dominates(mu.integer_coords(), la.integer_coords())


def support_maxima(chi: VirtualCharacter) -> list[Weight]:
    """Weights of the support that lie below no other weight of the support."""
    support = chi.support()

    if len(support) == 0:
        return []

    if not chi.is_integral_support():
        raise HalfIntegralSupport("support maxima need an integral support")

    points = np.array([w.integer_coords() for w in support], dtype=np.int64).reshape(len(support), chi.rank)
    maximal = np.ones(len(support), dtype=bool)

    for start in range(0, len(support), COMPARE_CHUNK):
        rows = points[start:start + COMPARE_CHUNK]

        # below[i, j]: rows[i] <= points[j]
        partial = np.cumsum(points[np.newaxis, :, :] - rows[:, np.newaxis, :], axis=2)
        if chi.rank > 0:
            below = np.all(partial >= 0, axis=2) & (partial[:, :, -1] % 2 == 0)
        else:
            below = np.ones((len(rows), len(support)), dtype=bool)

        for i in range(len(rows)):
            below[i, start + i] = False

        maximal[start:start + len(rows)] = ~np.any(below, axis=1)

    return [w for w, keep in zip(support, maximal) if keep]


@dataclass(frozen=True)
class GammaCertificate:
    orbit: Partition
    character_tag: str
    support_size: int
    maxima: tuple[Weight, ...]
    gamma: Weight | None
    expected: Weight | None
    verdict: str
    norm_check: bool | None
    witness: dict | None = None

    def __post_init__(self):
        assert self.character_tag in CHARACTER_TAGS, f"Unknown character tag: {self.character_tag}"
        assert self.verdict in (VERDICT_PASS, VERDICT_FAIL), f"Unknown verdict: {self.verdict}"
        assert (self.gamma is None) == (len(self.maxima) != 1), "gamma should be set iff the maximum is unique"

    @property
    def passed(self) -> bool:
        return self.verdict == VERDICT_PASS

    def to_dict(self) -> dict:
        d = {
            "orbit": list(self.orbit.parts),
            "tag": self.character_tag,
            "support_size": self.support_size,
            "maxima": [w.to_strings() for w in self.maxima],
            "gamma": self.gamma.to_strings() if self.gamma is not None else "incomparable",
            "expected": self.expected.to_strings() if self.expected is not None else None,
            "verdict": self.verdict,
            "norm_check": self.norm_check,
        }

        if self.witness is not None:
            d["witness"] = self.witness

        return d


def _norm_check(chi: VirtualCharacter, top: Weight | None) -> bool | None:
    """True iff the unique maximum also has strictly the largest norm in the support."""
    if top is None:
        return None

    top_norm = top.norm2()
    return all(w.norm2() < top_norm for w in chi.support() if w != top)


def certify(orbit: Partition,
            tag: str,
            chi: VirtualCharacter,
            expected: Weight | None,
            witness: dict | None = None,
            verbose=False) -> GammaCertificate:
    """Extract the maxima of chi and compare them with the expected weight."""
    maxima = tuple(support_maxima(chi))
    top = maxima[0] if len(maxima) == 1 else None
    norm_check = _norm_check(chi, top)

    ok = top is not None and norm_check is True
    if expected is not None:
        ok = ok and top == expected
    if witness is not None:
        ok = ok and witness.get("match", False)

    if verbose:
        print(f"{orbit} {tag}: maxima {', '.join(map(str, maxima)) or '-'}; norm check {norm_check}", file=sys.stderr)
        if norm_check is False:
            print(f"{orbit} {tag}: the root-order maximum {top} is not of strictly maximal norm", file=sys.stderr)

    return GammaCertificate(orbit=orbit,
                            character_tag=tag,
                            support_size=len(chi),
                            maxima=maxima,
                            gamma=top,
                            expected=expected,
                            verdict=VERDICT_PASS if ok else VERDICT_FAIL,
                            norm_check=norm_check,
                            witness=witness)


def theorem_c_closed_form(p: int, q: int) -> Weight:
    """Maximal weight of X^+ for the orbit (2^{2p} 1^{2q}), rank 2p + q.

    q = 2r+1: (2p+4r+2, 2p+4r, ..., 2p, (2p-2)^2, ..., 2^2, 0)
    q = 2r:   (2p+4r, 2p+4r-2, ..., 2p+2, (2p-1)^2, ..., 1^2)
    """
    assert p >= 1 and q >= 0, f"invalid family parameters p={p}, q={q}"

    r = q // 2

    if q % 2 == 1:
        head = list(range(2 * p + 4 * r + 2, 2 * p - 1, -2))
        pairs = [x for x in range(2 * p - 2, 0, -2) for _ in range(2)]
        coords = head + pairs + [0]
    else:
        head = list(range(2 * p + 4 * r, 2 * p + 1, -2))
        pairs = [x for x in range(2 * p - 1, 0, -2) for _ in range(2)]
        coords = head + pairs

    assert len(coords) == 2 * p + q
    return Weight.from_coords(coords)


def gamma(p: Partition, tag: str, catalog: Catalog | None = None, verbose=False) -> GammaCertificate:
    """Certificate of the maximal term of X^+, X^- or R_e for the orbit p."""
    if tag not in CHARACTER_TAGS:
        raise ValueError(f"Unknown character tag: {tag}")

    entry = catalog_lookup(p, catalog)
    desc = lambda_of(entry.orbit)
    params = spherical_params(entry.orbit)
    two_lambda = desc.h_dual

    if tag == TAG_COVER:
        chi = r_e(entry, verbose=verbose)
        expected = two_lambda
    else:
        chi = x_pi(entry, tag_character(tag, entry.abar_rank), verbose=verbose)
        expected = None
        if params is not None:
            fp, fq = params
            if tag == TAG_PLUS:
                expected = theorem_c_closed_form(fp, fq)
            elif fq % 2 == 0:
                expected = two_lambda

    return certify(entry.orbit, tag, chi, expected, verbose=verbose)


def verify_achar_sommers(p: Partition,
                         spec_override: SubgroupSpec | None = None,
                         catalog: Catalog | None = None,
                         verbose=False) -> GammaCertificate:
    """Check that the maximal term of R_e is 2 lambda_O with coefficient det(w_0).

    Args:
        p (Partition): the orbit
        spec_override (SubgroupSpec | None): subgroup for sigma_e, replacing the catalog
        catalog (Catalog | None): catalog to look the orbit up in

    Returns:
        GammaCertificate: certificate for the tag "cover"
    """
    desc = lambda_of(p)

    if spec_override is not None:
        spec = spec_override
        if spec.ambient_rank != desc.rank:
            raise RankMismatch(f"{spec} occupies {spec.ambient_rank} coordinates, {p} has rank {desc.rank}")
        if Counter(arrangement(spec).doubled) != Counter(desc.lambda_O.doubled):
            raise InvalidSubgroupSpec(f"arrangement {arrangement(spec)} of {spec} is not a rearrangement "
                                      f"of lambda_O = {desc.lambda_O}")
    else:
        entry = catalog_lookup(p, catalog)
        spec = entry.spec((0,) * entry.abar_rank)
        if spec is None:
            raise MissingSpec(f"no sigma_e data for {entry.orbit}")

    chi = r_x(arrangement(spec), spec, verbose=verbose)

    target = desc.h_dual
    w0_sign = det_sign(longest_element(spec))
    coeff = chi.coefficient(target)

    witness = {
        "spec": str(spec),
        "coefficient": format_fraction(coeff),
        "det_w0": w0_sign,
        "match": coeff == Fraction(w0_sign),
    }

    return certify(desc.partition, TAG_COVER, chi, target, witness=witness, verbose=verbose)


def parity_split_check(p: int, q: int) -> bool:
    """Whether Ind(2 lambda_O) survives in X^+ = (R_e + R_s) / 2 for (2^{2p} 1^{2q})."""
    assert p >= 1 and q >= 0, f"invalid family parameters p={p}, q={q}"

    w0_e = longest_element(SubgroupSpec((("D", p), ("C", p + q))))
    w0_s = longest_element(SubgroupSpec((("D", p + q + 1), ("C", p - 1))))

    return det_sign(w0_e) == det_sign(w0_s)

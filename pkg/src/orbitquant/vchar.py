#!/usr/bin/env python
# coding: UTF-8

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable
import sys

from bidict import bidict
import numpy as np
from tqdm import tqdm

from orbitquant.catalog import CellCatalogEntry, Catalog, T_Element, catalog_lookup, character_value
from orbitquant.errors import MissingSpec, RankMismatch, WrongFamily
from orbitquant.orbits import Partition, jm_h, spherical_params
from orbitquant.utils import format_fraction
from orbitquant.weights import Weight
from orbitquant.weyl import SubgroupSpec, arrangement, element_arrays, positive_roots, rho

T_Terms = dict[Weight, Fraction]

# Characters of the component group of (2^{2p} 1^{2q})
TAGS: bidict[str, T_Element] = bidict({"plus": (0,), "minus": (1,)})

CHUNK_SIZE = 1 << 16


def tag_character(tag: str, r: int) -> T_Element:
    """"plus" is the trivial character of (Z/2Z)^r, "minus" the one that is -1 on every generator."""
    if tag not in TAGS:
        raise ValueError(f"Unknown character tag: {tag}")

    # the trivial group has no nontrivial character
    if tag == "minus" and r == 0:
        raise MissingSpec("the component group is trivial, there is no character minus")

    return TAGS[tag] * r


def dominant_rep(v: Weight) -> Weight:
    return v.dominant()


@dataclass(frozen=True)
class VirtualCharacter:
    """Finite rational combination of the symbols Ind_T^G(lambda), keyed by dominant weight."""
    rank: int
    terms: T_Terms = field(default_factory=dict)

    def __post_init__(self):
        for weight, coeff in self.terms.items():
            assert weight.rank == self.rank, f"weight {weight} does not have rank {self.rank}"
            assert weight.is_dominant(), f"key {weight} is not dominant"
            assert isinstance(coeff, Fraction), f"coefficient of {weight} should be a Fraction, not {type(coeff)}"
            assert coeff != 0, f"zero coefficient stored for {weight}"

    @classmethod
    def zero(cls, rank: int) -> "VirtualCharacter":
        return cls(rank, {})

    @classmethod
    def ind(cls, weight: Weight, coeff: int | Fraction = 1) -> "VirtualCharacter":
        return cls.from_terms(weight.rank, [(weight, coeff)])

    @classmethod
    def from_terms(cls, rank: int, terms: Iterable[tuple[Weight, int | Fraction]]) -> "VirtualCharacter":
        """Sum the terms after replacing each weight by its dominant representative."""
        acc: T_Terms = {}

        for weight, coeff in terms:
            if weight.rank != rank:
                raise RankMismatch(f"weight {weight} does not have rank {rank}")
            key = dominant_rep(weight)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)

        return cls(rank, {k: v for k, v in acc.items() if v != 0})

    def _check_rank(self, other: "VirtualCharacter") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} != rank {other.rank}")

    def add(self, other: "VirtualCharacter") -> "VirtualCharacter":
        self._check_rank(other)

        terms = dict(self.terms)
        for weight, coeff in other.terms.items():
            terms[weight] = terms.get(weight, Fraction(0)) + coeff

        return VirtualCharacter(self.rank, {k: v for k, v in terms.items() if v != 0})

    def scale(self, factor: int | Fraction) -> "VirtualCharacter":
        factor = Fraction(factor)

        if factor == 0:
            return VirtualCharacter.zero(self.rank)

        return VirtualCharacter(self.rank, {k: v * factor for k, v in self.terms.items()})

    def equals(self, other: "VirtualCharacter") -> bool:
        self._check_rank(other)
        return self.terms == other.terms

    def coefficient(self, weight: Weight) -> Fraction:
        if weight.rank != self.rank:
            raise RankMismatch(f"weight {weight} does not have rank {self.rank}")
        return self.terms.get(dominant_rep(weight), Fraction(0))

    def support(self) -> list[Weight]:
        return sorted(self.terms.keys())

    def is_integral_support(self) -> bool:
        return all(w.is_integral() for w in self.terms)

    def has_integral_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def max_norm_terms(self) -> list[Weight]:
        if len(self.terms) == 0:
            return []

        top = max(w.norm2() for w in self.terms)
        return sorted(w for w in self.terms if w.norm2() == top)

    def to_records(self) -> list[dict]:
        """Terms sorted by descending norm, ties by ascending weight."""
        ordered = sorted(self.terms.items(), key=lambda item: (-item[0].norm2(), item[0].doubled))
        return [{"weight": w.to_strings(), "coeff": format_fraction(c)} for w, c in ordered]

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self.add(other)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self.add(other.scale(-1))

    def __neg__(self) -> "VirtualCharacter":
        return self.scale(-1)

    def __mul__(self, factor: int | Fraction) -> "VirtualCharacter":
        return self.scale(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if len(self.terms) == 0:
            return "0"

        return " + ".join(f"{r['coeff']}*Ind({','.join(r['weight'])})" for r in self.to_records())


def r_x(lambda_arr: Weight, spec: SubgroupSpec, verbose=False) -> VirtualCharacter:
    """Signed sum over the subgroup of Ind_T^G(lambda_arr - w.lambda_arr).

    Args:
        lambda_arr (Weight): lambda_O ordered as arrangement(spec)
        spec (SubgroupSpec): the reflection subgroup W'
        verbose (bool): print the enumeration size and show a progress bar

    Returns:
        VirtualCharacter: the character R_x
    """
    n = lambda_arr.rank

    if spec.ambient_rank != n:
        raise RankMismatch(f"{spec} occupies {spec.ambient_rank} coordinates, weight {lambda_arr} has rank {n}")

    perms, signs, dets = element_arrays(spec)
    lam = lambda_arr.numpy()

    if verbose:
        print(f"Enumerating {len(dets)} elements of {spec}", file=sys.stderr)

    acc: dict[tuple[int, ...], int] = {}

    for start in tqdm(range(0, len(dets), CHUNK_SIZE), desc="R_x", disable=not verbose):
        p = perms[start:start + CHUNK_SIZE]
        s = signs[start:start + CHUNK_SIZE]
        d = dets[start:start + CHUNK_SIZE]

        diff = lam[np.newaxis, :] - s * lam[p]
        dom = -np.sort(-np.abs(diff), axis=1)

        keys, inverse = np.unique(dom, axis=0, return_inverse=True)
        coeffs = np.zeros(len(keys), dtype=np.int64)
        np.add.at(coeffs, inverse.reshape(-1), d)

        for key, c in zip(keys, coeffs):
            if c != 0:
                k = tuple(int(x) for x in key)
                acc[k] = acc.get(k, 0) + int(c)

    return VirtualCharacter(n, {Weight(k): Fraction(c) for k, c in acc.items() if c != 0})


def x_pi(entry: CellCatalogEntry, pi: T_Element, verbose=False) -> VirtualCharacter:
    """(1 / |A|) * sum over x of pi(x) * R_x, with A = (Z/2Z)^r."""
    r = entry.abar_rank
    n = entry.orbit.total // 2

    missing = [x for x in entry.labels.values() if entry.spec(x) is None]
    if len(missing) > 0:
        names = ", ".join(entry.labels.inverse[x] for x in missing)
        raise MissingSpec(f"no sigma_x data for x in {{{names}}} of {entry.orbit}")

    if len(pi) != r:
        raise RankMismatch(f"character {pi} does not belong to (Z/2Z)^{r}")

    total = VirtualCharacter.zero(n)

    for x in entry.labels.values():
        spec = entry.specs[x]
        total = total + r_x(arrangement(spec), spec, verbose=verbose).scale(character_value(pi, x))

    return total.scale(Fraction(1, 2 ** r))


def r_e(entry: CellCatalogEntry, verbose=False) -> VirtualCharacter:
    return r_element(entry, (0,) * entry.abar_rank, verbose=verbose)


def r_element(entry: CellCatalogEntry, x: T_Element, verbose=False) -> VirtualCharacter:
    spec = entry.spec(x)

    if spec is None:
        raise MissingSpec(f"no sigma_{entry.labels.inverse[tuple(x)]} data for {entry.orbit}")

    return r_x(arrangement(spec), spec, verbose=verbose)


def unipotent_pair(p: Partition, catalog: Catalog | None = None, verbose=False) -> tuple[VirtualCharacter, VirtualCharacter]:
    """(X^+, X^-) of an orbit (2^{2p} 1^{2q})."""
    if spherical_params(p) is None:
        raise WrongFamily(f"{p} is not of the form (2^(2p) 1^(2q)) with p >= 1")

    entry = catalog_lookup(p, catalog)

    return (x_pi(entry, tag_character("plus", entry.abar_rank), verbose=verbose),
            x_pi(entry, tag_character("minus", entry.abar_rank), verbose=verbose))


def mcgovern_character(p: Partition) -> VirtualCharacter:
    """Ind of the product of (1 - e^alpha) over positive roots alpha with <alpha, h> in {0, 1}."""
    p = p.as_kind("C")
    n = p.total // 2
    h = jm_h(p, n).integer_coords()

    roots = [a for a in positive_roots(n, "C") if sum(x * y for x, y in zip(a, h)) in (0, 1)]

    # expanded in the weight lattice; canonicalized only when inducing
    product: dict[tuple[int, ...], int] = {(0,) * n: 1}

    for alpha in roots:
        nxt = dict(product)
        for nu, c in product.items():
            shifted = tuple(a + b for a, b in zip(nu, alpha))
            nxt[shifted] = nxt.get(shifted, 0) - c
        product = {k: v for k, v in nxt.items() if v != 0}

    return VirtualCharacter.from_terms(n, ((Weight.from_coords(nu), c) for nu, c in product.items()))


def denominator_sum(n: int) -> VirtualCharacter:
    """Sum over W(C_n) of det(w) * Ind(rho - w.rho)."""
    return r_x(Weight.from_coords(rho(n)), SubgroupSpec((("C", n),)))


def richardson_sum(p: int) -> VirtualCharacter:
    """Signed sum over S_{2p} of Ind(rho_A - w.rho_A), rho_A = ((2p-1)/2, ..., -(2p-1)/2)."""
    spec = SubgroupSpec((("A", 2 * p),))
    return r_x(arrangement(spec), spec)

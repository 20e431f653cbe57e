#!/usr/bin/env python
# coding: UTF-8

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
import json
import math
import os
import sys
import threading

from tqdm import tqdm

from orbitquant.errors import (HalfIntegralSupport, NonIntegralMultiplicity, NotDominant, RankMismatch,
                               WrongFamily)
from orbitquant.orbits import Partition
from orbitquant.utils import format_tuple
from orbitquant.vchar import VirtualCharacter
from orbitquant.weights import Weight
from orbitquant.weyl import dominates, positive_roots, rho

CACHE_VERSION = "orbit-quant/1"

T_Coords = tuple[int, ...]

VARIANT_PLAIN = "plain"
VARIANT_COVER_EXTRA = "cover-extra"


def dominant_weights(n: int, top: int) -> list[T_Coords]:
    """Dominant integral weights of rank n with first coordinate <= top, in ascending order."""
    weights = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(top + 1), n)]
    return sorted(weights)


def _height(nu: T_Coords, mu: T_Coords) -> int:
    """Number of simple roots in mu - nu (alpha_i = e_i - e_{i+1}, alpha_n = 2e_n)."""
    partial = 0
    height = 0

    for i, (a, b) in enumerate(zip(nu, mu)):
        partial += b - a
        height += partial // 2 if i == len(mu) - 1 else partial

    return height


def _inner(a: T_Coords, b: T_Coords) -> int:
    return sum(x * y for x, y in zip(a, b))


def _dominant(v) -> T_Coords:
    return tuple(sorted((abs(x) for x in v), reverse=True))


def _check_dominant_integral(mu: Weight, n: int) -> T_Coords:
    if mu.rank != n:
        raise RankMismatch(f"highest weight {mu} does not have rank {n}")
    if not mu.is_integral():
        raise HalfIntegralSupport(f"highest weight {mu} is not integral")
    if not mu.is_dominant():
        raise NotDominant(f"highest weight {mu} is not dominant")

    return mu.integer_coords()


class FreudenthalCache:
    """Dominant weight multiplicities of V_mu, one table per highest weight.

    Tables are computed whole by Freudenthal's recursion, top weight first. With a
    cache directory, each table is stored as a JSON file keyed by (n, mu).
    """

    def __init__(self, cache_dir: str | None = None, verbose=False):
        self.cache_dir = cache_dir
        self.verbose = verbose
        self.tables: dict[T_Coords, dict[T_Coords, int]] = {}
        self.lock = threading.Lock()

    def __len__(self):
        return len(self.tables)

    def table(self, mu: T_Coords) -> dict[T_Coords, int]:
        mu = tuple(mu)

        if mu in self.tables:
            return self.tables[mu]

        table = self._load(mu)
        if table is None:
            table = freudenthal_table(mu)
            self._save(mu, table)

        # first fill wins; every fill of a key yields the same table
        with self.lock:
            return self.tables.setdefault(mu, table)

    def multiplicity(self, mu: T_Coords, nu: T_Coords) -> int:
        return self.table(mu).get(_dominant(nu), 0)

    def _path(self, mu: T_Coords) -> str:
        assert self.cache_dir is not None
        name = "mu_" + "_".join(map(str, mu)) + ".json"
        return os.path.join(self.cache_dir, CACHE_VERSION.replace("/", "-"), f"n{len(mu)}", name)

    def _load(self, mu: T_Coords) -> dict[T_Coords, int] | None:
        if self.cache_dir is None:
            return None

        path = self._path(mu)
        if not os.path.isfile(path):
            return None

        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError):
            return None

        if data.get("version") != CACHE_VERSION or tuple(data.get("mu", ())) != mu:
            return None

        if self.verbose:
            print(f"Cache hit: {path}", file=sys.stderr)

        return {tuple(int(x) for x in key.split(",")): int(m) for key, m in data["mults"].items()}

    def _save(self, mu: T_Coords, table: dict[T_Coords, int]) -> None:
        if self.cache_dir is None:
            return

        path = self._path(mu)
        os.makedirs(os.path.dirname(path), exist_ok=True)

        data = {
            "version": CACHE_VERSION,
            "n": len(mu),
            "mu": list(mu),
            "mults": {",".join(map(str, nu)): m for nu, m in sorted(table.items())},
        }

        # write then rename so readers never see a partial file
        tmp_path = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp_path, "w", encoding="utf-8") as f:
            json.dump(data, f, sort_keys=True)
        os.replace(tmp_path, path)

        if self.verbose:
            print(f"Cache write: {path}", file=sys.stderr)


def freudenthal_table(mu: T_Coords) -> dict[T_Coords, int]:
    """Multiplicities of every dominant weight of the sp(2n) module V_mu.

    m(nu) * (|mu+rho|^2 - |nu+rho|^2) = 2 * sum_{alpha>0} sum_{k>=1} <nu+k*alpha, alpha> m(nu+k*alpha)
    """
    mu = tuple(mu)
    n = len(mu)

    if n == 0:
        return {(): 1}

    roots = positive_roots(n, "C")
    rho_n = rho(n)

    below = [nu for nu in dominant_weights(n, mu[0]) if dominates(nu, mu)]
    below.sort(key=lambda nu: _height(nu, mu))

    mu_rho = tuple(a + b for a, b in zip(mu, rho_n))
    top = _inner(mu_rho, mu_rho)

    table: dict[T_Coords, int] = {}

    for nu in below:
        if nu == mu:
            table[nu] = 1
            continue

        nu_rho = tuple(a + b for a, b in zip(nu, rho_n))
        denom = top - _inner(nu_rho, nu_rho)

        total = 0
        for alpha in roots:
            k = 1
            while True:
                shifted = tuple(a + k * b for a, b in zip(nu, alpha))
                m = table.get(_dominant(shifted))
                # the alpha-string through nu is unbroken
                if m is None:
                    break
                total += _inner(shifted, alpha) * m
                k += 1

        mult, rem = divmod(2 * total, denom)
        assert rem == 0, f"Freudenthal recursion gave a non-integer at {nu} in V_{mu}"
        table[nu] = mult

    return table


def weight_multiplicity(mu: Weight, nu: Weight, n: int, cache: FreudenthalCache | None = None) -> int:
    """Dimension of the nu-weight space of V_mu."""
    mu_coords = _check_dominant_integral(mu, n)

    if nu.rank != n:
        raise RankMismatch(f"weight {nu} does not have rank {n}")
    if not nu.is_integral():
        return 0

    if cache is None:
        return freudenthal_table(mu_coords).get(_dominant(nu.integer_coords()), 0)

    return cache.multiplicity(mu_coords, nu.integer_coords())


def weyl_dimension(mu: Weight, n: int) -> int:
    mu_coords = _check_dominant_integral(mu, n)
    rho_n = rho(n)

    dim = Fraction(1)
    for alpha in positive_roots(n, "C"):
        dim *= Fraction(_inner(tuple(a + b for a, b in zip(mu_coords, rho_n)), alpha), _inner(rho_n, alpha))

    assert dim.denominator == 1
    return int(dim)


def orbit_size(nu: Weight) -> int:
    """Size of the W(C_n)-orbit of a weight."""
    dom = nu.dominant()
    n = dom.rank
    counts: dict[int, int] = {}
    for x in dom.doubled:
        counts[x] = counts.get(x, 0) + 1

    n_zero = counts.pop(0, 0)
    stabilizer = 2 ** n_zero * math.factorial(n_zero) * math.prod(math.factorial(m) for m in counts.values())

    return 2 ** n * math.factorial(n) // stabilizer


def weight_system(mu: Weight, cache: FreudenthalCache | None = None) -> dict[Weight, int]:
    """Dominant weights of V_mu with their multiplicities."""
    mu_coords = _check_dominant_integral(mu, mu.rank)
    table = cache.table(mu_coords) if cache is not None else freudenthal_table(mu_coords)

    return {Weight.from_coords(nu): m for nu, m in sorted(table.items(), reverse=True)}


@dataclass(frozen=True)
class KTypeDecomposition:
    """Multiplicity of V_mu for every dominant integral mu with mu_1 <= bound."""
    rank: int
    bound: int
    mults: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        assert self.bound >= 0, f"bound should be nonnegative: {self.bound}"
        for mu, m in self.mults.items():
            assert isinstance(m, int), f"multiplicity of {mu} should be an int, not {type(m)}"

    def __getitem__(self, mu: Weight) -> int:
        return self.mults.get(mu, 0)

    def __len__(self):
        return len(self.mults)

    def nonzero(self) -> dict[Weight, int]:
        return {mu: m for mu, m in self.mults.items() if m != 0}

    def mismatches(self, expected: dict[Weight, int]) -> list[dict]:
        rows = []
        for mu in sorted(self.mults):
            if self.mults[mu] != expected.get(mu, 0):
                rows.append({"mu": mu.to_strings(), "computed": self.mults[mu], "expected": expected.get(mu, 0)})
        return rows

    def to_records(self, expected: dict[Weight, int] | None = None) -> list[dict]:
        records = []

        for mu in sorted(self.mults):
            record = {"mu": mu.to_strings(), "mult": self.mults[mu]}
            if expected is not None:
                record["closed_form"] = expected.get(mu, 0)
                record["match"] = self.mults[mu] == expected.get(mu, 0)
            records.append(record)

        return records


def decompose(chi: VirtualCharacter,
              bound: int,
              cache: FreudenthalCache | None = None,
              threads: int = 1,
              verbose=False) -> KTypeDecomposition:
    """Read off the V_mu multiplicities of a virtual character, mu_1 <= bound.

    Args:
        chi (VirtualCharacter): a combination of Ind_T^G(nu) with integral nu
        bound (int): largest first coordinate scanned
        cache (FreudenthalCache | None): shared multiplicity tables
        threads (int): number of worker threads for the scan
        verbose (bool): print the scan size and show a progress bar

    Returns:
        KTypeDecomposition: multiplicities of all scanned weights, zeros included
    """
    assert bound >= 0 and threads >= 1

    if not chi.is_integral_support():
        bad = [str(w) for w in chi.support() if not w.is_integral()]
        raise HalfIntegralSupport(f"cannot decompose a character with half-integral support: {', '.join(bad[:5])}")

    if cache is None:
        cache = FreudenthalCache(verbose=verbose)

    n = chi.rank
    mus = dominant_weights(n, bound)
    terms = [(nu.integer_coords(), c) for nu, c in chi.terms.items()]

    if verbose:
        print(f"Scanning {len(mus)} dominant weights of rank {n} up to {bound} against {len(terms)} terms",
              file=sys.stderr)

    def mult_of(mu: T_Coords) -> int:
        total = Fraction(0)
        if len(terms) > 0:
            table = cache.table(mu)
            for nu, c in terms:
                total += c * table.get(nu, 0)

        if total.denominator != 1:
            raise NonIntegralMultiplicity(f"multiplicity {total} of V_{format_tuple(mu)} is not an integer")

        return int(total)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        results = list(tqdm(executor.map(mult_of, mus), total=len(mus), desc="K-types", disable=not verbose))

    return KTypeDecomposition(rank=n,
                              bound=bound,
                              mults={Weight.from_coords(mu): m for mu, m in zip(mus, results)})


def _family_length(p: Partition) -> int:
    """l for a partition (2^l 1^{2q})."""
    mults = p.multiplicities()

    if set(mults) - {1, 2} or mults.get(1, 0) % 2 != 0:
        raise WrongFamily(f"{p} is not of the form (2^l 1^(2q))")

    return mults.get(2, 0)


def closed_form(p: Partition, mu: Weight, variant: str = VARIANT_PLAIN) -> int:
    """Multiplicity of V_mu predicted by the spherical closed forms.

    plain: mu = (2m_1, ..., 2m_l, 0, ...); cover-extra: mu = (2m_1+1, ..., 2m_l+1, 0, ...).
    """
    l = _family_length(p)
    n = p.total // 2

    if mu.rank != n or not mu.is_integral() or not mu.is_dominant():
        return 0

    coords = mu.integer_coords()
    head, tail = coords[:l], coords[l:]

    if any(x != 0 for x in tail):
        return 0

    if variant == VARIANT_PLAIN:
        return int(all(x % 2 == 0 for x in head))

    if variant == VARIANT_COVER_EXTRA:
        return int(l > 0 and all(x % 2 == 1 for x in head))

    raise ValueError(f"Unknown closed-form variant: {variant}")


def closed_form_decomposition(p: Partition, bound: int, variants: tuple[str, ...] = (VARIANT_PLAIN,)) -> dict[Weight, int]:
    """Sum of the requested closed forms over the scan window of decompose."""
    n = p.total // 2
    expected = {}

    for mu in dominant_weights(n, bound):
        weight = Weight.from_coords(mu)
        value = sum(closed_form(p, weight, v) for v in variants)
        if value != 0:
            expected[weight] = value

    return expected

#!/usr/bin/env python
# coding: UTF-8

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator
import math
import re

import numpy as np

from orbitquant.errors import InvalidSubgroupSpec, RankMismatch
from orbitquant.weights import Weight

FACTOR_KINDS = ("A", "C", "D")


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group W(C_n) in window notation.

    Position i sends coordinate i to sign(images[i]) times coordinate |images[i]|
    (1-based), so act(w, v)[i] = sign(images[i]) * v[|images[i]| - 1].
    """
    images: tuple[int, ...]

    def __post_init__(self):
        assert isinstance(self.images, tuple), f"images should be a tuple, not {type(self.images)}"
        assert sorted(abs(x) for x in self.images) == list(range(1, len(self.images) + 1)), \
            f"|images| should be a permutation of 1..n: {self.images}"

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_arrays(cls, perm: np.ndarray, signs: np.ndarray) -> "SignedPermutation":
        return cls(tuple(int(s) * (int(i) + 1) for i, s in zip(perm, signs)))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def perm(self) -> tuple[int, ...]:
        """0-based source index of each output coordinate."""
        return tuple(abs(x) - 1 for x in self.images)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if x > 0 else -1 for x in self.images)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """The product self * other, acting as act(self * other, v) = act(self, act(other, v))."""
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} != rank {other.rank}")

        return SignedPermutation(tuple(s * other.images[i] for i, s in zip(self.perm, self.signs)))

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.rank
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            images[j] = s * (i + 1)
        return SignedPermutation(tuple(images))

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((self.rank, self.rank), dtype=np.int64)
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            m[i, j] = s
        return m

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return self.compose(other)


def act(w: SignedPermutation, v: Weight) -> Weight:
    if w.rank != v.rank:
        raise RankMismatch(f"element of rank {w.rank} cannot act on weight of rank {v.rank}")

    return Weight(tuple(s * v.doubled[j] for j, s in zip(w.perm, w.signs)))


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)

    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign

    return sign


def det_sign(w: SignedPermutation) -> int:
    """Determinant of the signed permutation matrix, equal to (-1)^l(w) on every reflection subgroup."""
    n_negative = sum(1 for s in w.signs if s < 0)
    return _perm_sign(w.perm) * (-1) ** n_negative


def positive_roots(n: int, kind: str = "C") -> list[tuple[int, ...]]:
    """Positive roots in coordinates: e_i - e_j (i<j), plus e_i + e_j for C/D, plus 2e_i for C."""
    roots = []

    for i in range(n):
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = 1, -1
            roots.append(tuple(minus))

            if kind in ("C", "D"):
                plus = [0] * n
                plus[i], plus[j] = 1, 1
                roots.append(tuple(plus))

        if kind == "C":
            long_root = [0] * n
            long_root[i] = 2
            roots.append(tuple(long_root))

    return roots


def rho(n: int) -> tuple[int, ...]:
    """Half sum of positive roots of C_n: (n, n-1, ..., 1)."""
    return tuple(range(n, 0, -1))


def dominates(lower: tuple[int, ...], upper: tuple[int, ...]) -> bool:
    """Root order of C_n on integral weights: upper - lower is a nonnegative sum of simple roots.

    Equivalent to all partial sums of the difference being >= 0 with an even total.
    """
    partial = 0
    for a, b in zip(lower, upper):
        partial += b - a
        if partial < 0:
            return False

    return partial % 2 == 0


def length(w: SignedPermutation, kind: str = "C") -> int:
    """Coxeter length in W(C_n), W(D_n) or S_n: the number of positive roots sent to negative ones."""
    count = 0

    for root in positive_roots(w.rank, kind):
        image = [s * root[j] for j, s in zip(w.perm, w.signs)]
        leading = next(x for x in image if x != 0)
        if leading < 0:
            count += 1

    return count


@dataclass(frozen=True)
class SubgroupSpec:
    """Block product of reflection factors, e.g. D_p x C_{p+q}.

    A C-factor of size k is all signed permutations of its block, a D-factor the ones
    with an even number of sign changes, an A-factor the symmetric group S_k.
    """
    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        assert isinstance(self.factors, tuple), f"factors should be a tuple, not {type(self.factors)}"
        for kind, size in self.factors:
            assert kind in FACTOR_KINDS, f"Unknown factor kind: {kind}"
            assert isinstance(size, int) and size >= 0, f"Invalid factor size: {size}"

    @classmethod
    def parse(cls, text: str, ambient_rank: int | None = None) -> "SubgroupSpec":
        """Parse the textual form "D3xC2" (also "D_3 x C_2" or with the multiplication sign)."""
        tokens = [t for t in re.split(r"\s*[x×*]\s*", text.strip()) if t != ""]
        factors = []

        for token in tokens:
            m = re.fullmatch(r"([ACD])_?\{?([0-9]+)\}?", token)
            if m is None:
                raise InvalidSubgroupSpec(f"Cannot parse factor {token!r} in {text!r}")
            factors.append((m.group(1), int(m.group(2))))

        if len(factors) == 0:
            raise InvalidSubgroupSpec(f"Empty subgroup spec: {text!r}")

        spec = cls(tuple(factors))

        if ambient_rank is not None and spec.ambient_rank != ambient_rank:
            raise RankMismatch(f"{spec} occupies {spec.ambient_rank} coordinates, expected {ambient_rank}")

        return spec

    @classmethod
    def from_list(cls, factors: list) -> "SubgroupSpec":
        try:
            return cls(tuple((str(kind), int(size)) for kind, size in factors))
        except (AssertionError, TypeError, ValueError) as e:
            raise InvalidSubgroupSpec(f"Invalid factor list: {factors}") from e

    @property
    def ambient_rank(self) -> int:
        return sum(size for _, size in self.factors)

    @property
    def offsets(self) -> tuple[int, ...]:
        offsets = []
        start = 0
        for _, size in self.factors:
            offsets.append(start)
            start += size
        return tuple(offsets)

    @property
    def order(self) -> int:
        return math.prod(factor_order(kind, size) for kind, size in self.factors)

    def to_list(self) -> list[list]:
        return [[kind, size] for kind, size in self.factors]

    def __str__(self) -> str:
        return "x".join(f"{kind}{size}" for kind, size in self.factors)


def factor_order(kind: str, size: int) -> int:
    if kind == "A":
        return math.factorial(size)
    if kind == "C":
        return 2 ** size * math.factorial(size)
    # D_0 and D_1 are trivial
    return 2 ** max(size - 1, 0) * math.factorial(size)


@lru_cache(maxsize=None)
def _block_arrays(kind: str, size: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    perms = list(permutations(range(size)))

    if kind == "A":
        sign_vectors = [(1,) * size]
    else:
        sign_vectors = list(product((1, -1), repeat=size))
        if kind == "D":
            sign_vectors = [s for s in sign_vectors if s.count(-1) % 2 == 0]

    perm_arr = np.array(perms, dtype=np.int64).reshape(len(perms), size)
    sign_arr = np.array(sign_vectors, dtype=np.int64).reshape(len(sign_vectors), size)
    perm_dets = np.array([_perm_sign(p) for p in perms], dtype=np.int64)
    sign_dets = np.prod(sign_arr, axis=1) if size > 0 else np.ones(1, dtype=np.int64)

    n_perm, n_sign = len(perms), len(sign_vectors)

    return (np.repeat(perm_arr, n_sign, axis=0),
            np.tile(sign_arr, (n_perm, 1)),
            np.repeat(perm_dets, n_sign) * np.tile(sign_dets, n_perm))


def element_arrays(spec: SubgroupSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All elements of the subgroup as arrays.

    Returns:
        tuple[np.ndarray, np.ndarray, np.ndarray]: ``perms`` (N, n) with 0-based source indices,
            ``signs`` (N, n) with entries +-1 and ``dets`` (N,) with the sign character.
    """
    perms = np.zeros((1, 0), dtype=np.int64)
    signs = np.zeros((1, 0), dtype=np.int64)
    dets = np.ones(1, dtype=np.int64)

    for (kind, size), offset in zip(spec.factors, spec.offsets):
        b_perms, b_signs, b_dets = _block_arrays(kind, size)
        n_old, n_block = len(dets), len(b_dets)

        perms = np.concatenate([np.repeat(perms, n_block, axis=0), np.tile(b_perms + offset, (n_old, 1))], axis=1)
        signs = np.concatenate([np.repeat(signs, n_block, axis=0), np.tile(b_signs, (n_old, 1))], axis=1)
        dets = np.repeat(dets, n_block) * np.tile(b_dets, n_old)

    return perms, signs, dets


def enumerate_elements(spec: SubgroupSpec) -> Iterator[SignedPermutation]:
    """Yield every element of the block product once, embedded in its ambient rank."""
    perms, signs, _ = element_arrays(spec)

    for perm, sign in zip(perms, signs):
        yield SignedPermutation.from_arrays(perm, sign)


def arrangement(spec: SubgroupSpec) -> Weight:
    """Canonical weight of the subgroup: D_k -> (k-1..0), C_k -> (k..1), A_k -> ((k-1)/2..-(k-1)/2)."""
    doubled: list[int] = []

    for kind, size in spec.factors:
        if kind == "D":
            doubled.extend(2 * x for x in range(size - 1, -1, -1))
        elif kind == "C":
            doubled.extend(2 * x for x in range(size, 0, -1))
        else:
            doubled.extend(range(size - 1, -size, -2))

    return Weight(tuple(doubled))


def longest_element(spec: SubgroupSpec) -> SignedPermutation:
    """Longest element of the block product, built block by block."""
    images: list[int] = []

    for (kind, size), offset in zip(spec.factors, spec.offsets):
        coords = list(range(offset + 1, offset + size + 1))

        if kind == "C":
            images.extend(-c for c in coords)
        elif kind == "D":
            # odd rank keeps the last coordinate fixed
            block = [-c for c in coords]
            if size % 2 == 1:
                block[-1] = coords[-1]
            images.extend(block)
        else:
            images.extend(reversed(coords))

    return SignedPermutation(tuple(images))

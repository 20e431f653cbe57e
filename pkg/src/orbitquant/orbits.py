#!/usr/bin/env python
# coding: UTF-8

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from orbitquant.errors import (InvalidInputError, NotDecreasing, ParityViolation, RankMismatch,
                               TotalParityMismatch, WrongTotalParity)
from orbitquant.utils import parse_int_list
from orbitquant.weights import Weight

KIND_C = "C"
KIND_B = "B"
KIND_ANY = "any"

KINDS = (KIND_C, KIND_B, KIND_ANY)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    kind: str = KIND_ANY

    def __post_init__(self):
        assert isinstance(self.parts, tuple), f"parts should be a tuple, not {type(self.parts)}"
        assert all(isinstance(x, int) and x > 0 for x in self.parts), f"parts should be positive ints: {self.parts}"
        assert all(a >= b for a, b in zip(self.parts, self.parts[1:])), f"parts should be weakly decreasing: {self.parts}"
        assert self.kind in KINDS, f"Unknown kind: {self.kind}"

    @classmethod
    def from_string(cls, text: str, kind: str = KIND_C) -> "Partition":
        """Parse "2,2,1,1" (or "2^2,1^2") and validate it for ``kind``."""
        try:
            parts = parse_int_list(text)
        except ValueError as e:
            raise InvalidInputError(str(e)) from e

        return validate(parts, kind)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def as_kind(self, kind: str) -> "Partition":
        return validate(self.parts, kind)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _parity_violations(parts: Iterable[int], kind: str) -> list[int]:
    """Parts whose multiplicity breaks the kind's rule, largest first.

    Type C: odd parts need even multiplicity. Type B: even parts need even multiplicity.
    """
    counter = Counter(parts)

    if kind == KIND_C:
        bad = [part for part, mult in counter.items() if part % 2 == 1 and mult % 2 == 1]
    elif kind == KIND_B:
        bad = [part for part, mult in counter.items() if part % 2 == 0 and mult % 2 == 1]
    else:
        bad = []

    return sorted(bad, reverse=True)


def validate(parts: Iterable[int], kind: str = KIND_C) -> Partition:
    """Check a list of parts against the partition rules of ``kind``.

    Args:
        parts (Iterable[int]): parts, weakly decreasing and positive
        kind (str): "C" (symplectic), "B" (odd orthogonal) or "any"

    Returns:
        Partition: the validated partition
    """
    parts = tuple(int(x) for x in parts)

    if kind not in KINDS:
        raise InvalidInputError(f"Unknown partition kind: {kind}")

    if any(x <= 0 for x in parts):
        raise InvalidInputError(f"Partition parts should be positive: {parts}")

    for i, (a, b) in enumerate(zip(parts, parts[1:])):
        if a < b:
            raise NotDecreasing(f"part {b} at position {i + 2} is larger than part {a} before it")

    total = sum(parts)

    if kind == KIND_C and total % 2 != 0:
        raise WrongTotalParity(f"type C partitions have even total, got {total}")
    if kind == KIND_B and total % 2 != 1:
        raise WrongTotalParity(f"type B partitions have odd total, got {total}")

    violations = _parity_violations(parts, kind)
    if len(violations) > 0:
        part = violations[0]
        raise ParityViolation(part, parts.count(part), kind)

    return Partition(parts, kind)


def transpose(p: Partition) -> Partition:
    """Conjugate partition: part k counts the parts of p that are >= k."""
    if len(p.parts) == 0:
        return Partition((), KIND_ANY)

    return Partition(tuple(sum(1 for x in p.parts if x >= k) for k in range(1, p.parts[0] + 1)), KIND_ANY)


def collapse(p: Partition, kind: str) -> Partition:
    """B- or C-collapse: the largest partition below p satisfying the kind's parity rule.

    Repeatedly takes the largest violating part, lowers its last occurrence by one
    and raises the next strictly smaller slot by one.
    """
    if kind not in (KIND_B, KIND_C):
        raise InvalidInputError(f"collapse is defined for kinds B and C, not {kind}")

    expected_parity = 1 if kind == KIND_B else 0
    if p.total % 2 != expected_parity:
        raise TotalParityMismatch(f"total {p.total} of {p} cannot be collapsed to kind {kind}")

    parts = list(p.parts)

    while True:
        violations = _parity_violations(parts, kind)
        if len(violations) == 0:
            break

        part = violations[0]
        i = len(parts) - 1 - parts[::-1].index(part)
        parts[i] -= 1

        j = i + 1
        while j < len(parts) and parts[j] >= parts[i]:
            j += 1

        if j == len(parts):
            parts.append(0)
        parts[j] += 1

        parts = [x for x in parts if x > 0]

    return Partition(tuple(parts), kind)


def ls_dual(p: Partition) -> Partition:
    """Lusztig-Spaltenstein dual of a type C partition of 2n, a type B partition of 2n+1."""
    p = p.as_kind(KIND_C)
    return collapse(transpose(Partition(p.parts + (1,), KIND_ANY)), KIND_B)


def jm_h(p: Partition, n: int) -> Weight:
    """Dominant form of the Jacobson-Morozov semisimple element of the orbit p in rank n.

    Each part k contributes the string k-1, k-3, ..., 1-k; the n largest entries are kept.
    """
    if p.total not in (2 * n, 2 * n + 1):
        raise RankMismatch(f"{p} has total {p.total}, which matches neither 2n={2 * n} nor 2n+1={2 * n + 1}")

    entries = [k - 1 - 2 * i for k in p.parts for i in range(k)]
    entries.sort(reverse=True)

    return Weight.from_coords(entries[:n])


@dataclass(frozen=True)
class OrbitDescriptor:
    partition: Partition
    rank: int
    dual: Partition
    h_self: Weight
    h_dual: Weight
    lambda_O: Weight

    def __post_init__(self):
        assert self.partition.kind == KIND_C, f"partition should be of kind C: {self.partition}"
        assert self.partition.total == 2 * self.rank, f"rank mismatch: {self.partition} vs n={self.rank}"
        assert self.dual.kind == KIND_B and self.dual.total == 2 * self.rank + 1, f"invalid dual: {self.dual}"
        assert self.lambda_O * 2 == self.h_dual, f"lambda_O should be half of h_dual: {self.lambda_O} vs {self.h_dual}"
        assert self.lambda_O.is_dominant(), f"lambda_O should be dominant: {self.lambda_O}"

    def spherical_params(self) -> tuple[int, int] | None:
        return spherical_params(self.partition)

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "rank": self.rank,
            "dual": list(self.dual.parts),
            "h_self": self.h_self.to_strings(),
            "h_dual": self.h_dual.to_strings(),
            "lambda_O": self.lambda_O.to_strings(),
        }


def lambda_of(p: Partition) -> OrbitDescriptor:
    p = p.as_kind(KIND_C)
    n = p.total // 2
    dual = ls_dual(p)
    h_dual = jm_h(dual, n)

    return OrbitDescriptor(partition=p,
                           rank=n,
                           dual=dual,
                           h_self=jm_h(p, n),
                           h_dual=h_dual,
                           lambda_O=h_dual.halved())


def spherical_params(p: Partition) -> tuple[int, int] | None:
    """(p, q) when the partition is (2^{2p} 1^{2q}) with p >= 1, else None."""
    mults = p.multiplicities()

    if set(mults.keys()) - {1, 2}:
        return None

    n_twos = mults.get(2, 0)
    n_ones = mults.get(1, 0)

    if n_twos == 0 or n_twos % 2 != 0 or n_ones % 2 != 0:
        return None

    return n_twos // 2, n_ones // 2


def spherical_partition(p: int, q: int) -> Partition:
    return validate((2,) * (2 * p) + (1,) * (2 * q), KIND_C)

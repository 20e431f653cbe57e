#!/usr/bin/env python
# coding: UTF-8


from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from orbitquant.errors import RankMismatch
from orbitquant.utils import format_fraction, format_tuple, parse_fraction


@dataclass(frozen=True, order=True)
class Weight:
    """A vector of half-integers in the coordinates e_1, ..., e_n.

    Coordinates are stored doubled, so every entry of ``doubled`` is an int and
    arithmetic stays exact. A weight is integral when all doubled entries are even.
    """
    doubled: tuple[int, ...]

    def __post_init__(self):
        assert isinstance(self.doubled, tuple), f"doubled should be a tuple, not {type(self.doubled)}"
        assert all(isinstance(x, int) for x in self.doubled), f"doubled entries should be int: {self.doubled}"

    @classmethod
    def from_coords(cls, coords: Iterable[int | str | Fraction]) -> "Weight":
        doubled = []

        for c in coords:
            value = parse_fraction(c) * 2
            if value.denominator != 1:
                raise ValueError(f"Coordinate {c} is not a half-integer")
            doubled.append(int(value))

        return cls(tuple(doubled))

    @classmethod
    def of(cls, *coords: int | str | Fraction) -> "Weight":
        return cls.from_coords(coords)

    @classmethod
    def from_doubled(cls, doubled: Iterable[int]) -> "Weight":
        return cls(tuple(int(x) for x in doubled))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def denominator(self) -> int:
        return 1 if self.is_integral() else 2

    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    def integer_coords(self) -> tuple[int, ...]:
        assert self.is_integral(), f"{self} is not integral"
        return tuple(x // 2 for x in self.doubled)

    def is_dominant(self) -> bool:
        """Weakly decreasing with nonnegative entries (the W(C_n) chamber)."""
        if len(self.doubled) > 0 and self.doubled[-1] < 0:
            return False
        return all(a >= b for a, b in zip(self.doubled, self.doubled[1:]))

    def dominant(self) -> "Weight":
        return Weight(tuple(sorted((abs(x) for x in self.doubled), reverse=True)))

    def halved(self) -> "Weight":
        if not self.is_integral():
            raise ValueError(f"Cannot halve the half-integral weight {self}")
        return Weight(tuple(x // 2 for x in self.doubled))

    def norm2(self) -> Fraction:
        return Fraction(sum(x * x for x in self.doubled), 4)

    def inner(self, other: "Weight") -> Fraction:
        self._check_rank(other)
        return Fraction(sum(a * b for a, b in zip(self.doubled, other.doubled)), 4)

    def numpy(self, dtype=np.int64) -> np.ndarray:
        """Doubled coordinates as an integer array."""
        return np.array(self.doubled, dtype=dtype)

    def to_strings(self) -> list[str]:
        return [format_fraction(c) for c in self.coords]

    def concat(self, other: "Weight") -> "Weight":
        return Weight(self.doubled + other.doubled)

    def _check_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} != rank {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.doubled))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(a * int(k) for a in self.doubled))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return self.rank

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self.doubled[i], 2)

    def __str__(self) -> str:
        return format_tuple(self.coords)

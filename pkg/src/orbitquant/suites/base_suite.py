#!/usr/bin/env python
# coding: UTF-8


from abc import ABC, abstractmethod
from typing import Any, Iterable
import sys

from tqdm import tqdm

from orbitquant.catalog import Catalog
from orbitquant.ktypes import FreudenthalCache
from orbitquant.vogan import VERDICT_FAIL, VERDICT_PASS

T_Certificate = dict[str, Any]

# (2^{2p} 1^{2q}) instances up to Sp(10)
FAMILY_DESK = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]

# 2p + q <= 5
FAMILY_RANK5 = [(p, q) for p in range(1, 3) for q in range(0, 6) if 2 * p + q <= 5]


def verdict(ok: bool) -> str:
    return VERDICT_PASS if ok else VERDICT_FAIL


def select_family(defaults: Iterable[tuple[int, int]],
                  p: int | None = None,
                  q: int | None = None,
                  r: int | None = None) -> list[tuple[int, int]]:
    """Family instances picked by --p/--q/--r.

    --r R stands for the two instances q = 2R and q = 2R + 1. With p and q (or r)
    given, the instances are built directly; otherwise the defaults are filtered.
    """
    qs: list[int] | None = None
    if q is not None:
        qs = [q]
    elif r is not None:
        qs = [2 * r, 2 * r + 1]

    if p is not None and qs is not None:
        return [(p, x) for x in qs]

    return [(fp, fq) for fp, fq in defaults
            if (p is None or fp == p) and (qs is None or fq in qs)]


class BaseSuite(ABC):
    """A named list of instances, each checked into a certificate dict with a "verdict"."""
    name = ""

    def __init__(self,
                 instances: Iterable | None = None,
                 bound: int = 6,
                 catalog: Catalog | None = None,
                 cache: FreudenthalCache | None = None,
                 threads: int = 1,
                 verbose=False,
                 use_cache=True):
        self.instances = list(instances) if instances is not None else self.default_instances()
        self.bound = bound
        self.catalog = catalog
        self.freudenthal = cache if cache is not None else FreudenthalCache(verbose=verbose)
        self.threads = threads
        self.verbose = verbose
        self.use_cache = use_cache
        self.cache: dict[int, T_Certificate] = {}

    def __len__(self):
        return len(self.instances)

    def __getitem__(self, key: int) -> T_Certificate:
        if self.use_cache and key in self.cache:
            return self.cache[key]

        certificate = {"suite": self.name, **self.check(self.instances[key])}
        assert certificate.get("verdict") in (VERDICT_PASS, VERDICT_FAIL), f"{self.name}: certificate without verdict"

        self.cache[key] = certificate

        return certificate

    def __iter__(self):
        for key in range(len(self)):
            yield self[key]

    def run(self) -> list[T_Certificate]:
        certificates = list(tqdm(self, total=len(self), desc=self.name, disable=not self.verbose))

        if self.verbose:
            n_passed = sum(1 for c in certificates if c["verdict"] == VERDICT_PASS)
            print(f"Verified: {n_passed}/{len(certificates)} passed ({self.name})", file=sys.stderr)

        return certificates

    @classmethod
    @abstractmethod
    def default_instances(cls) -> list:
        raise NotImplementedError()

    @abstractmethod
    def check(self, instance) -> T_Certificate:
        """Check one instance.

        Args:
            instance: one element of self.instances

        Returns:
            T_Certificate: JSON-ready dict with at least the key "verdict"
        """
        raise NotImplementedError()

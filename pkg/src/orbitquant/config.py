#!/usr/bin/env python
# coding: UTF-8

from argparse import Namespace
from dataclasses import dataclass

from orbitquant.catalog import Catalog
from orbitquant.errors import InvalidInputError
from orbitquant.ktypes import FreudenthalCache

FORMATS = ("json", "table", "xlsx")

DEFAULT_BOUND = 6
DEFAULT_OUT_PATH = "./orbit_quant.xlsx"


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str = "json"
    out_path: str = DEFAULT_OUT_PATH
    cache_dir: str | None = None
    threads: int = 1
    bound: int = DEFAULT_BOUND
    catalog_path: str | None = None
    verbose: bool = False

    def __post_init__(self):
        assert self.fmt in FORMATS, f"Unknown output format: {self.fmt}"
        assert isinstance(self.threads, int) and self.threads >= 1, f"threads should be >= 1: {self.threads}"
        assert isinstance(self.bound, int) and self.bound >= 0, f"bound should be >= 0: {self.bound}"

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        threads = getattr(args, "threads", 1)
        bound = getattr(args, "bound", DEFAULT_BOUND)

        if threads < 1:
            raise InvalidInputError(f"--threads should be at least 1, got {threads}")
        if bound < 0:
            raise InvalidInputError(f"--bound should be nonnegative, got {bound}")

        return cls(command=args.command,
                   fmt=getattr(args, "format", "json"),
                   out_path=getattr(args, "out_path", DEFAULT_OUT_PATH),
                   cache_dir=getattr(args, "cache_dir", None),
                   threads=threads,
                   bound=bound,
                   catalog_path=getattr(args, "catalog", None),
                   verbose=getattr(args, "verbose", False))

    def load_catalog(self) -> Catalog:
        return Catalog.load(self.catalog_path, verbose=self.verbose)

    def make_cache(self) -> FreudenthalCache:
        return FreudenthalCache(cache_dir=self.cache_dir, verbose=self.verbose)

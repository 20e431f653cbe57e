#!/usr/bin/env python
# coding: UTF-8

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
import json
import sys

from bidict import bidict

from orbitquant.errors import InvalidCatalogFile, InvalidInputError, NotInCatalog
from orbitquant.orbits import KIND_C, Partition, lambda_of, spherical_params, validate
from orbitquant.weyl import SubgroupSpec, arrangement

CATALOG_VERSION = "orbit-quant/1"

T_Element = tuple[int, ...]


def element_labels(r: int) -> bidict[str, T_Element]:
    """Labels of the elements of (Z/2Z)^r: "e", "s" (r = 1) or "s1", "s2", "s1s2", ..."""
    labels: bidict[str, T_Element] = bidict()

    for bits in product((0, 1), repeat=r):
        if not any(bits):
            label = "e"
        elif r == 1:
            label = "s"
        else:
            label = "".join(f"s{i + 1}" for i, b in enumerate(bits) if b)
        labels[label] = bits

    return labels


def character_value(pi: T_Element, x: T_Element) -> int:
    """Value at x of the sign character of (Z/2Z)^r indexed by the bit vector pi."""
    return (-1) ** sum(a * b for a, b in zip(pi, x))


def parse_element(key: str, r: int) -> T_Element:
    """Accept a label ("e", "s", "s1s2") or a bit string ("01")."""
    labels = element_labels(r)

    if key in labels:
        return labels[key]

    if len(key) == r and set(key) <= {"0", "1"}:
        return tuple(int(c) for c in key)

    raise InvalidCatalogFile(f"Unknown group element {key!r} for abar_rank {r}")


@dataclass(frozen=True)
class CellCatalogEntry:
    orbit: Partition
    abar_rank: int
    specs: dict[T_Element, SubgroupSpec] = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        assert self.orbit.kind == KIND_C, f"orbit should be a type C partition: {self.orbit}"
        assert self.abar_rank >= 0, f"abar_rank should be nonnegative, not {self.abar_rank}"
        for x, spec in self.specs.items():
            assert len(x) == self.abar_rank, f"element {x} does not belong to (Z/2Z)^{self.abar_rank}"
            assert spec.ambient_rank * 2 == self.orbit.total, f"{spec} does not have rank {self.orbit.total // 2}"

    @property
    def labels(self) -> bidict[str, T_Element]:
        return element_labels(self.abar_rank)

    def spec(self, x: T_Element) -> SubgroupSpec | None:
        return self.specs.get(tuple(x))

    def inconsistent_elements(self) -> list[T_Element]:
        """Elements whose canonical arrangement is not a rearrangement of lambda_O."""
        target = Counter(lambda_of(self.orbit).lambda_O.doubled)
        return [x for x, spec in self.specs.items() if Counter(arrangement(spec).doubled) != target]

    def to_dict(self) -> dict:
        labels = self.labels
        return {
            "orbit": list(self.orbit.parts),
            "abar_rank": self.abar_rank,
            "specs": {labels.inverse[x]: str(spec) for x, spec in sorted(self.specs.items())},
            "note": self.note,
        }


def spherical_entry(p: int, q: int) -> CellCatalogEntry:
    """Entry of the orbit (2^{2p} 1^{2q}).

    sigma_e comes from D_p x C_{p+q}, sigma_s from D_{p+q+1} x C_{p-1}; s corresponds to
    the orbit (2^{2p-1} 1^{2q+2}).
    """
    assert p >= 1 and q >= 0, f"invalid family parameters p={p}, q={q}"

    orbit = validate((2,) * (2 * p) + (1,) * (2 * q), KIND_C)

    return CellCatalogEntry(orbit=orbit,
                            abar_rank=1,
                            specs={(0,): SubgroupSpec((("D", p), ("C", p + q))),
                                   (1,): SubgroupSpec((("D", p + q + 1), ("C", p - 1)))},
                            note=f"spherical family p={p}, q={q}; s <-> (2^{2 * p - 1} 1^{2 * q + 2})")


class Catalog:
    """Left-cell data for the orbits the engine knows about.

    Explicit entries (the embedded file plus any override file) take precedence over
    the rule for the (2^{2p} 1^{2q}) family.
    """

    def __init__(self, entries: dict[Partition, CellCatalogEntry] | None = None, verbose=False):
        self.entries: dict[Partition, CellCatalogEntry] = {}
        self.verbose = verbose

        for entry in (entries or {}).values():
            self.add(entry)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, p: Partition) -> bool:
        try:
            self.lookup(p)
        except NotInCatalog:
            return False
        return True

    def __iter__(self):
        return iter(self.entries.values())

    @classmethod
    def load_embedded(cls, verbose=False) -> "Catalog":
        text = resources.files("orbitquant").joinpath("data/catalog.json").read_text(encoding="utf-8")
        catalog = cls(verbose=verbose)
        catalog.update_from_dict(json.loads(text), source="embedded catalog")
        return catalog

    @classmethod
    def load(cls, override_path: str | None = None, verbose=False) -> "Catalog":
        catalog = cls.load_embedded(verbose=verbose)

        if override_path is not None:
            catalog.update_from_file(override_path)

        return catalog

    def add(self, entry: CellCatalogEntry) -> None:
        bad = entry.inconsistent_elements()
        if len(bad) > 0:
            labels = entry.labels
            names = ", ".join(labels.inverse[x] for x in bad)
            raise InvalidCatalogFile(f"arrangement of sigma_x for x in {{{names}}} is not a rearrangement "
                                     f"of lambda_O for {entry.orbit}")

        self.entries[entry.orbit] = entry

    def update_from_file(self, path: str) -> None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise InvalidCatalogFile(f"Cannot read catalog file {path}: {e}") from e

        self.update_from_dict(data, source=path)

    def update_from_dict(self, data: dict, source: str = "") -> None:
        if not isinstance(data, dict) or data.get("version") != CATALOG_VERSION:
            raise InvalidCatalogFile(f"{source}: expected a catalog document with version {CATALOG_VERSION!r}")

        entries = data.get("entries", [])

        for raw in entries:
            self.add(self._parse_entry(raw, source))

        if self.verbose:
            print(f"Loaded {len(entries)} catalog entries from {source}", file=sys.stderr)

    @staticmethod
    def _parse_entry(raw: dict, source: str) -> CellCatalogEntry:
        try:
            orbit = validate(raw["orbit"], KIND_C)
            r = int(raw["abar_rank"])
            specs = {}

            for key, factors in raw.get("specs", {}).items():
                if isinstance(factors, str):
                    spec = SubgroupSpec.parse(factors)
                else:
                    spec = SubgroupSpec.from_list(factors)
                specs[parse_element(str(key), r)] = spec

            return CellCatalogEntry(orbit=orbit, abar_rank=r, specs=specs, note=str(raw.get("note", source)))

        except InvalidInputError as e:
            raise InvalidCatalogFile(f"{source}: invalid entry {raw}: {e}") from e
        except (KeyError, TypeError, ValueError, AssertionError) as e:
            raise InvalidCatalogFile(f"{source}: malformed entry {raw}") from e

    def lookup(self, p: Partition) -> CellCatalogEntry:
        p = p.as_kind(KIND_C)

        if p in self.entries:
            return self.entries[p]

        params = spherical_params(p)
        if params is not None:
            return spherical_entry(*params)

        raise NotInCatalog(p)


_default_catalog: Catalog | None = None


def default_catalog() -> Catalog:
    global _default_catalog

    if _default_catalog is None:
        _default_catalog = Catalog.load_embedded()

    return _default_catalog


def catalog_lookup(p: Partition, catalog: Catalog | None = None) -> CellCatalogEntry:
    return (catalog or default_catalog()).lookup(p)

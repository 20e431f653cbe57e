#!/usr/bin/env python
# coding: UTF-8

from orbitquant.catalog import Catalog, catalog_lookup
from orbitquant.config import RunConfig
from orbitquant.errors import InvalidInputError, MissingSpec, NotInCatalog, WrongFamily
from orbitquant.ktypes import (VARIANT_COVER_EXTRA, VARIANT_PLAIN, closed_form_decomposition, decompose)
from orbitquant.orbits import Partition, lambda_of, ls_dual
from orbitquant.suites import FAMILY_SUITES, SUITES, select_family
from orbitquant.vchar import VirtualCharacter, mcgovern_character, r_element, tag_character, x_pi
from orbitquant.vogan import CHARACTER_TAGS, gamma
from orbitquant.writers import Report

CHARACTER_CHOICES = ("plus", "minus", "Re", "Rs", "mcgovern")

# closed forms matching each character of a (2^l 1^{2q}) orbit
CLOSED_FORM_VARIANTS = {
    "plus": (VARIANT_PLAIN,),
    "mcgovern": (VARIANT_PLAIN,),
    "minus": (VARIANT_COVER_EXTRA,),
    "Re": (VARIANT_PLAIN, VARIANT_COVER_EXTRA),
}


def build_character(p: Partition, tag: str, catalog: Catalog | None = None, verbose=False) -> VirtualCharacter:
    if tag not in CHARACTER_CHOICES:
        raise InvalidInputError(f"Unknown character tag: {tag}")

    if tag == "mcgovern":
        return mcgovern_character(p)

    entry = catalog_lookup(p, catalog)

    if tag in ("plus", "minus"):
        return x_pi(entry, tag_character(tag, entry.abar_rank), verbose=verbose)

    if tag == "Re":
        return r_element(entry, (0,) * entry.abar_rank, verbose=verbose)

    labels = entry.labels
    label = "s" if "s" in labels else "s1"
    if label not in labels:
        raise MissingSpec(f"{p} has a trivial component group, there is no element s")

    return r_element(entry, labels[label], verbose=verbose)


def orbit(config: RunConfig, p: Partition) -> Report:
    desc = lambda_of(p)

    try:
        entry = catalog_lookup(desc.partition, config.load_catalog()).to_dict()
    except NotInCatalog:
        entry = None

    params = desc.spherical_params()
    document = {
        **desc.to_dict(),
        "spherical_params": list(params) if params is not None else None,
        "catalog_entry": entry,
    }

    return Report(kind="orbit", document=document)


def dual(config: RunConfig, p: Partition) -> Report:
    d = ls_dual(p)
    return Report(kind="dual", document={"partition": list(p.parts), "dual": list(d.parts)})


def character(config: RunConfig, p: Partition, tag: str) -> Report:
    chi = build_character(p, tag, config.load_catalog(), verbose=config.verbose)
    records = chi.to_records()

    return Report(kind="character",
                  document={"partition": list(p.parts), "tag": tag, "rank": chi.rank, "terms": records},
                  rows=records)


def ktypes(config: RunConfig, p: Partition, tag: str) -> Report:
    chi = build_character(p, tag, config.load_catalog(), verbose=config.verbose)
    dec = decompose(chi, config.bound, cache=config.make_cache(), threads=config.threads, verbose=config.verbose)

    expected = None
    if tag in CLOSED_FORM_VARIANTS:
        try:
            expected = closed_form_decomposition(p, config.bound, CLOSED_FORM_VARIANTS[tag])
        except WrongFamily:
            expected = None

    records = dec.to_records(expected)
    mismatches = dec.mismatches(expected) if expected is not None else []

    document = {
        "partition": list(p.parts),
        "tag": tag,
        "rank": dec.rank,
        "bound": dec.bound,
        "closed_form": expected is not None,
        "mults": [r for r in records if r["mult"] != 0 or r.get("closed_form", 0) != 0],
        "mismatches": mismatches,
    }

    return Report(kind="ktypes", document=document, rows=records, ok=len(mismatches) == 0)


def gamma_certificate(config: RunConfig, p: Partition, tag: str) -> Report:
    if tag not in CHARACTER_TAGS:
        raise InvalidInputError(f"gamma accepts the tags {', '.join(CHARACTER_TAGS)}, not {tag}")

    certificate = gamma(p, tag, catalog=config.load_catalog(), verbose=config.verbose)
    d = certificate.to_dict()

    return Report(kind="gamma", document=d, rows=[d], ok=certificate.passed)


def verify(config: RunConfig,
           suite: str,
           p: int | None = None,
           q: int | None = None,
           r: int | None = None,
           n: int | None = None) -> Report:
    if suite not in SUITES:
        raise InvalidInputError(f"Unknown suite: {suite}")

    suite_class = SUITES[suite]
    instances = None

    if suite in FAMILY_SUITES and (p, q, r) != (None, None, None):
        instances = select_family(suite_class.default_instances(), p, q, r)
    elif suite == "lemma44" and p is not None:
        instances = [p]
    elif suite == "denominator" and n is not None:
        instances = [n]

    if instances is not None:
        for instance in instances:
            if isinstance(instance, tuple) and (instance[0] < 1 or instance[1] < 0):
                raise InvalidInputError(f"family parameters need p >= 1 and q >= 0, got {instance}")
            if isinstance(instance, int) and instance < 1:
                raise InvalidInputError(f"{suite} needs a positive parameter, got {instance}")
        if len(instances) == 0:
            raise InvalidInputError(f"no instance of {suite} matches the given parameters")

    runner = suite_class(instances=instances,
                         bound=config.bound,
                         catalog=config.load_catalog(),
                         cache=config.make_cache(),
                         threads=config.threads,
                         verbose=config.verbose)
    certificates = runner.run()
    n_passed = sum(1 for c in certificates if c["verdict"] == "pass")

    document = {
        "suite": suite,
        "passed": n_passed,
        "total": len(certificates),
        "certificates": certificates,
    }

    return Report(kind="verify", document=document, rows=certificates, ok=n_passed == len(certificates))

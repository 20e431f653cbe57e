#!/usr/bin/env python
# coding: UTF-8

import pytest

from orbitquant.catalog import Catalog
from orbitquant.ktypes import FreudenthalCache
from orbitquant.orbits import KIND_C, validate
from orbitquant.vchar import unipotent_pair


@pytest.fixture(scope="session")
def catalog():
    return Catalog.load_embedded()


@pytest.fixture(scope="session")
def freudenthal():
    return FreudenthalCache()


@pytest.fixture(scope="session")
def pair22():
    """(X^+, X^-) of the orbit (2,2) in Sp(4)."""
    return unipotent_pair(validate((2, 2), KIND_C))


@pytest.fixture(scope="session")
def resources():
    return {
        "example_orbit": (4, 4, 3, 3, 2, 2, 1, 1),
        "example_dual": (9, 5, 5, 1, 1),
        "example_max": (8, 6, 4, 4, 4, 2, 2, 2, 0, 0),
        "family_desk": [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)],
    }

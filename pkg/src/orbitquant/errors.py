#!/usr/bin/env python
# coding: UTF-8


class OrbitQuantError(Exception):
    """Base class of every error raised by orbitquant.

    The CLI maps each subclass to its ``exit_code``.
    """
    exit_code = 1


class InvalidInputError(OrbitQuantError, ValueError):
    exit_code = 2


class NotDecreasing(InvalidInputError):
    pass


class ParityViolation(InvalidInputError):
    def __init__(self, part: int, multiplicity: int, kind: str):
        self.part = part
        self.multiplicity = multiplicity
        self.kind = kind
        super().__init__(f"part {part} has multiplicity {multiplicity}, "
                         f"which is not allowed for kind {kind}")


class WrongTotalParity(InvalidInputError):
    pass


class TotalParityMismatch(InvalidInputError):
    pass


class RankMismatch(InvalidInputError):
    pass


class NotDominant(InvalidInputError):
    pass


class HalfIntegralSupport(InvalidInputError):
    pass


class WrongFamily(InvalidInputError):
    pass


class InvalidSubgroupSpec(InvalidInputError):
    pass


class InvalidCatalogFile(InvalidInputError):
    pass


class MissingDataError(OrbitQuantError, LookupError):
    exit_code = 3


class NotInCatalog(MissingDataError):
    def __init__(self, partition):
        self.partition = partition
        super().__init__(f"{partition} is not in the cell catalog. "
                         "Supply its SubgroupSpec with --catalog PATH (or spec_override).")


class MissingSpec(MissingDataError):
    pass


class NonIntegralMultiplicity(OrbitQuantError, ArithmeticError):
    exit_code = 1

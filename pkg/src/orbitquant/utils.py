#!/usr/bin/env python
# coding: UTF-8

from fractions import Fraction
from typing import Iterable
import re


def format_fraction(value: Fraction | int) -> str:
    """Exact string form of a rational: "3", "-1/2"."""
    value = Fraction(value)

    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str | int | Fraction) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)

    return Fraction(str(text).strip())


def parse_int_list(text: str) -> list[int]:
    """Parse "4,4,3,3" or the exponent shorthand "2^2,1^4".

    Args:
        text (str): comma separated integers, each optionally followed by ^multiplicity

    Returns:
        list[int]: the expanded list in the given order
    """
    values: list[int] = []

    for token in re.split(r"[,\s]+", text.strip()):
        if token == "":
            continue

        m = re.fullmatch(r"(-?[0-9]+)(?:\^([0-9]+))?", token)
        if m is None:
            raise ValueError(f"Cannot parse integer token: {token!r}")

        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        values.extend([value] * mult)

    return values


def format_tuple(values: Iterable) -> str:
    return "(" + ",".join(format_fraction(v) for v in values) + ")"

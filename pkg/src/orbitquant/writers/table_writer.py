#!/usr/bin/env python
# coding: UTF-8

import json
import sys

import pandas as pd

from orbitquant.config import RunConfig
from orbitquant.utils import format_tuple
from .base_writer import BaseWriter, Report


def cell(value) -> str | int | bool:
    """Render a document value for a table cell: weights as tuples, nested data as JSON."""
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        if all(isinstance(x, (str, int)) and not isinstance(x, bool) for x in value):
            try:
                return format_tuple(value)
            except ValueError:
                pass
        return json.dumps(value, sort_keys=True)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def rows_to_frame(rows: list[dict]) -> pd.DataFrame:
    return pd.DataFrame([{k: cell(v) for k, v in row.items()} for row in rows])


def summary_items(report: Report) -> list[tuple[str, object]]:
    """Scalar and weight-valued entries of the document, without the row collections."""
    items = []

    for key, value in sorted(report.versioned().items()):
        if isinstance(value, list) and len(value) > 0 and isinstance(value[0], dict):
            continue
        items.append((key, cell(value)))

    return items


class TableWriter(BaseWriter):
    @classmethod
    def write(cls, report: Report, config: RunConfig, stream=None) -> None:
        stream = stream if stream is not None else sys.stdout

        for key, value in summary_items(report):
            stream.write(f"{key}: {value}\n")

        if len(report.rows) > 0:
            stream.write("\n")
            stream.write(rows_to_frame(report.rows).to_string(index=False))
            stream.write("\n")

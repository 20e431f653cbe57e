#!/usr/bin/env python
# coding: UTF-8


from .base_writer import BaseWriter, Report
from .json_writer import JSONWriter
from .table_writer import TableWriter
from .xlsx_writer import XLSXWriter

WRITERS = {
    "json": JSONWriter,
    "table": TableWriter,
    "xlsx": XLSXWriter,
}

__all__ = ["BaseWriter", "Report", "JSONWriter", "TableWriter", "XLSXWriter", "WRITERS"]

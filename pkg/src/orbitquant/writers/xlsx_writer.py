#!/usr/bin/env python
# coding: UTF-8

import sys

import pandas as pd

from orbitquant.config import RunConfig
from .base_writer import BaseWriter, Report
from .table_writer import rows_to_frame, summary_items

# Excel limits sheet names to 31 characters
MAX_SHEET_NAME = 31


class XLSXWriter(BaseWriter):
    @classmethod
    def write(cls, report: Report, config: RunConfig) -> None:
        df_summary = pd.DataFrame([{"key": k, "value": str(v)} for k, v in summary_items(report)])

        if len(report.rows) > 0:
            df_rows = rows_to_frame(report.rows)
        else:
            df_rows = pd.DataFrame(columns=["(empty)"])

        with pd.ExcelWriter(config.out_path, engine='openpyxl', mode='w') as writer:
            df_summary.to_excel(writer, sheet_name='summary', index=False)
            df_rows.to_excel(writer, sheet_name=report.kind[:MAX_SHEET_NAME], index=False)

        if config.verbose:
            print(f"Wrote {len(report.rows)} rows to {config.out_path}", file=sys.stderr)

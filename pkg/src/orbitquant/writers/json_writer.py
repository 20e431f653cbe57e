#!/usr/bin/env python
# coding: UTF-8

import json
import sys

from orbitquant.config import RunConfig
from .base_writer import BaseWriter, Report


class JSONWriter(BaseWriter):
    @classmethod
    def write(cls, report: Report, config: RunConfig, stream=None) -> None:
        stream = stream if stream is not None else sys.stdout
        stream.write(json.dumps(report.versioned(), sort_keys=True, indent=2, ensure_ascii=False))
        stream.write("\n")

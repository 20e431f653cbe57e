#!/usr/bin/env python
# coding: UTF-8


from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from orbitquant.config import RunConfig

DOCUMENT_VERSION = "orbit-quant/1"


@dataclass(frozen=True)
class Report:
    """Result of one command: a JSON document plus the rows shown in tables and sheets."""
    kind: str
    document: dict
    rows: list[dict] = field(default_factory=list)
    ok: bool = True

    def __post_init__(self):
        assert isinstance(self.kind, str) and self.kind != "", "kind should be a non-empty str"
        assert isinstance(self.document, dict), f"document should be a dict, not {type(self.document)}"

    def versioned(self) -> dict:
        return {"version": DOCUMENT_VERSION, "kind": self.kind, **self.document}


class BaseWriter(ABC):
    @classmethod
    @abstractmethod
    def write(cls, report: Report, config: RunConfig) -> None:
        raise NotImplementedError()

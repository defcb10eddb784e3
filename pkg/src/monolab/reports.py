from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class CapExceeded(Exception):
    """A search would exceed its configured size cap."""


@dataclass
class PropertyReport:
    """Outcome of a property check.

    A ``FAILS`` verdict always carries a ``witness`` that the matching checker
    can re-verify; ``HOLDS`` may carry a ``certificate``.
    """

    name: str
    verdict: Verdict
    certificate: Any = None
    witness: Any = None
    stats: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def from_bool(cls, name: str, ok: bool, certificate: Any = None, witness: Any = None,
                  **stats: Any) -> PropertyReport:
        return cls(name, Verdict.HOLDS if ok else Verdict.FAILS,
                   certificate if ok else None, None if ok else witness, dict(stats))

    def to_json(self) -> dict:
        from .io import to_jsonable

        return {
            "property": self.name,
            "verdict": self.verdict.value,
            "certificate": to_jsonable(self.certificate),
            "witness": to_jsonable(self.witness),
            "stats": to_jsonable(self.stats),
        }


@contextmanager
def timed(stats: dict):
    t0 = time.perf_counter()
    try:
        yield stats
    finally:
        stats["elapsed_s"] = round(time.perf_counter() - t0, 6)

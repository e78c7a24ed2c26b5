"""Exact Kan(n) superalgebra and V(alpha) bimodule engine."""

import json
from dataclasses import dataclass
from typing import Any, Optional

try:
    from . import _kanrep
except ImportError:
    import _kanrep

UsageError = _kanrep.UsageError

__all__ = ["Result", "UsageError", "build", "check", "classify", "iso", "special"]


@dataclass(frozen=True)
class Result:
    exit_code: int
    data: Any

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _wrap(raw) -> Result:
    code, text = raw
    return Result(code, json.loads(text))


def build(kind: str, n: int, alpha: str = "", parity: Optional[int] = None, N: int = 4, field: str = "q") -> Result:
    return _wrap(_kanrep.build(kind, n, str(alpha), parity, N, field))


def check(suite: str, target: str, limit: int = 10, threads: int = 1, field: str = "q") -> Result:
    return _wrap(_kanrep.check(suite, target, limit, threads, field))


def classify(target: str, field: str = "q") -> Result:
    return _wrap(_kanrep.classify(target, field))


def iso(left: str, right: str, field: str = "q") -> Result:
    return _wrap(_kanrep.iso(left, right, field))


def special(target: str, field: str = "q") -> Result:
    return _wrap(_kanrep.special(target, field))

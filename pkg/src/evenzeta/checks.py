"""The record every exact identity check produces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple, Union

Value = Union[Fraction, int, float, str]


@dataclass(frozen=True)
class IdentityCheckResult:
    """One instance of a named identity.

    ``passed`` is true exactly when ``lhs == rhs``; it is derived, never
    supplied, so a result cannot claim success it did not earn.
    """

    name: str
    params: Tuple[Tuple[str, Any], ...]
    lhs: Value
    rhs: Value

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)

    @classmethod
    def make(cls, name: str, lhs: Value, rhs: Value, **params) -> "IdentityCheckResult":
        return cls(name, tuple(params.items()), lhs, rhs)


def tally(results: Iterable) -> Tuple[int, int]:
    """(passed, failed) counts over anything with a ``passed`` attribute."""
    passed = failed = 0
    for r in results:
        if r.passed:
            passed += 1
        else:
            failed += 1
    return passed, failed


def failures(results: Iterable) -> List:
    return [r for r in results if not r.passed]

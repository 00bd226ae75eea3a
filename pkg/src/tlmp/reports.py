"""Structured verification reports.

Verifiers return a report rather than a bare boolean: one check per identity,
each carrying the lexicographically first violating basis tuple and both
evaluated sides.  Reports serialize to plain dicts for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactlinalg import qstr


@dataclass(frozen=True)
class Witness:
    """First violating basis tuple of an identity, with both sides evaluated."""

    args: tuple
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "args": list(self.args),
            "lhs": [qstr(x) for x in self.lhs],
            "rhs": [qstr(x) for x in self.rhs],
        }


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    witness: Witness | None = None

    def to_dict(self) -> dict:
        d: dict = {"label": self.label, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


@dataclass
class Report:
    """Aggregate of named checks; passes iff every check passes."""

    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            label = f"{prefix}{c.label}" if prefix else c.label
            self.checks.append(Check(label, c.passed, c.witness))

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Check | None:
        fails = self.failed_checks()
        return fails[0] if fails else None

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def check_identity(label: str, tuples, lhs_fn, rhs_fn) -> Check:
    """Evaluate lhs/rhs on basis tuples in the given (lexicographic) order and
    record the first mismatch.  The enumeration order fixes the witness, so the
    result does not depend on any evaluation schedule."""
    for t in tuples:
        lhs = lhs_fn(*t)
        rhs = rhs_fn(*t)
        if lhs != rhs:
            return Check(label, False, Witness(t, tuple(lhs), tuple(rhs)))
    return Check(label, True)


def check_sides(label: str, tuples, sides_fn) -> Check:
    """Like check_identity for an evaluator returning both sides at once."""
    for t in tuples:
        lhs, rhs = sides_fn(*t)
        if lhs != rhs:
            return Check(label, False, Witness(t, tuple(lhs), tuple(rhs)))
    return Check(label, True)

"""Identity-check records shared by the algebraic and realization layers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .exact_poly import Polynomial

__all__ = ["Check", "Report", "IDENTICAL", "ON_SHELL", "FAIL"]

IDENTICAL = "identical"
ON_SHELL = "on_shell"
FAIL = "FAIL"


@dataclass
class Check:
    """Outcome of one identity.

    Attributes
    ----------
    name : str
        Human-readable identity name (with the index assignment if any).
    label : str
        Short family tag of the identity (the ``paper_eq`` JSON field).
    status : str
        ``identical``, ``on_shell`` or ``FAIL``.
    residual_terms : int
        Terms of the residual after reduction (0 unless FAIL).
    detail : str
        Free text, e.g. printed and recomputed sides of a mismatch.
    residual : Polynomial or None
        Unreduced residual, kept for numerical cross-checks.
    on_shell_only : bool
        Whether the identity is meaningful only on the constraint surface.
    """

    name: str
    label: str
    status: str
    residual_terms: int = 0
    detail: str = ""
    residual: Polynomial | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.status in (IDENTICAL, ON_SHELL)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "paper_eq": self.label,
            "status": self.status,
            "residual_terms": self.residual_terms,
        }


@dataclass
class Report:
    """Ordered collection of checks with optional derived data."""

    n: int
    title: str
    checks: list[Check] = field(default_factory=list)
    derived: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    def merge(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        for k, v in other.derived.items():
            self.derived[k] = v
        return self

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def by_label(self, label: str) -> list[Check]:
        return [c for c in self.checks if c.label == label]

    def to_json(self) -> dict:
        doc = {"n": self.n, "identities": [c.to_json() for c in self.checks]}
        if self.derived:
            doc["derived"] = self.derived
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.title} (n={self.n})"]
        for c in self.checks:
            lines.append(f"  [{c.status:>9}] {c.label}: {c.name}")
            if c.detail and not c.passed:
                lines.extend("      " + ln for ln in c.detail.splitlines())
        if self.derived:
            lines.append("  derived:")
            for k, v in self.derived.items():
                lines.append(f"    {k}: {v}")
        ok = sum(c.passed for c in self.checks)
        lines.append(f"  {ok}/{len(self.checks)} checks pass")
        return "\n".join(lines)

"""Pass/fail reports for diagram checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Matrix

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not applicable"


@dataclass
class DiagramCheck:
    name: str
    status: str
    lhs: Matrix | None = None
    rhs: Matrix | None = None
    detail: str = ""

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self, with_matrices=False):
        out = {"diagram": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if with_matrices and self.status == FAIL and self.lhs is not None:
            out["lhs"] = [[str(v) for v in r] for r in self.lhs.to_rows()]
            out["rhs"] = [[str(v) for v in r] for r in self.rhs.to_rows()]
        return out


@dataclass
class AxiomReport:
    """A list of diagram checks. Truthy iff no check failed.

    Failed checks keep both composites so the disagreement can be inspected.
    """

    checks: list = field(default_factory=list)

    def compare(self, name, lhs: Matrix, rhs: Matrix, detail=""):
        ok = lhs == rhs
        self.checks.append(DiagramCheck(name, PASS if ok else FAIL,
                                        None if ok else lhs, None if ok else rhs, detail))
        return ok

    def record(self, name, ok: bool, detail="", lhs=None, rhs=None):
        self.checks.append(DiagramCheck(name, PASS if ok else FAIL, lhs, rhs, detail))
        return ok

    def skip(self, name, detail=""):
        self.checks.append(DiagramCheck(name, NOT_APPLICABLE, detail=detail))

    def extend(self, other: AxiomReport, prefix=""):
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(DiagramCheck(name, c.status, c.lhs, c.rhs, c.detail))
        return self

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def failed_names(self):
        return [c.name for c in self.failures]

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def status_of(self, name):
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def summary(self, with_matrices=False):
        return {
            "ok": self.ok,
            "checked": sum(1 for c in self.checks if c.status != NOT_APPLICABLE),
            "failed": [c.to_dict(with_matrices) for c in self.failures],
            "not_applicable": [c.name for c in self.checks if c.status == NOT_APPLICABLE],
        }

    def __str__(self):
        lines = [f"{c.status:>14}  {c.name}" + (f"  ({c.detail})" if c.detail else "")
                 for c in self.checks]
        return "\n".join(lines)

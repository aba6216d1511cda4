"""Pass/fail bookkeeping shared by the identity checks and the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["Check", "VerificationReport", "PASS", "FAIL", "REPORT_ONLY"]

PASS = "pass"
FAIL = "fail"
REPORT_ONLY = "report-only-discrepancy"


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    lhs: str = ""
    rhs: str = ""
    elapsed: float = 0.0
    note: str = ""

    def to_json(self) -> dict[str, Any]:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed": round(self.elapsed, 6),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True unless some check failed; report-only discrepancies don't count."""
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def add(self, id: str, anchor: str, lhs: Any, rhs: Any, *, elapsed: float = 0.0,
            report_only: bool = False, note: str = "") -> Check:
        """Record an equality check between ``lhs`` and ``rhs``."""
        if lhs == rhs:
            status = PASS
        else:
            status = REPORT_ONLY if report_only else FAIL
        check = Check(id, anchor, status, str(lhs), str(rhs), elapsed, note)
        self.checks.append(check)
        return check

    def add_bool(self, id: str, anchor: str, passed: bool, lhs: Any = "", rhs: Any = "",
                 *, elapsed: float = 0.0, report_only: bool = False, note: str = "") -> Check:
        if passed:
            status = PASS
        else:
            status = REPORT_ONLY if report_only else FAIL
        check = Check(id, anchor, status, str(lhs), str(rhs), elapsed, note)
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, REPORT_ONLY: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "counts": self.counts(),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_plain(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.id} ({c.anchor})"
            if c.status != PASS:
                line += f"\n      lhs: {c.lhs}\n      rhs: {c.rhs}"
                if c.note:
                    line += f"\n      note: {c.note}"
            lines.append(line)
        n = self.counts()
        lines.append(
            f"  {n[PASS]} passed, {n[FAIL]} failed, {n[REPORT_ONLY]} report-only discrepancies"
        )
        return "\n".join(lines)

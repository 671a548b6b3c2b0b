"""Structured pass/fail reports for validators.

A validator runs a fixed list of named checks and reports each one, so a
failure always names the axiom that broke and the first witness where it
broke.  Reports render both as text and as JSON with a stable key order.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    where: tuple | None = None
    detail: str = ""

    def to_json_dict(self) -> dict:
        out: dict = {"name": self.name, "ok": self.ok}
        if self.where is not None:
            out["where"] = list(self.where)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ValidationReport:
    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, where: tuple | None = None, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(ok), where, detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed_names(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def render_text(self) -> str:
        lines = [f"validation of {self.subject}: {'OK' if self.ok else 'FAILED'}"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            loc = f" at {c.where}" if (not c.ok and c.where is not None) else ""
            det = f": {c.detail}" if (not c.ok and c.detail) else ""
            lines.append(f"  [{mark}] {c.name}{loc}{det}")
        return "\n".join(lines)

"""Pass/fail reporting shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        if self.passed:
            return f"[PASS] {self.name}"
        suffix = f": {self.witness}" if self.witness else ""
        return f"[FAIL] {self.name}{suffix}"


@dataclass
class VerifyReport:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.checks.append(CheckResult(name, passed, witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        n_fail = sum(1 for c in self.checks if not c.passed)
        verdict = "all passed" if n_fail == 0 else f"{n_fail} failed"
        out.append(f"{self.title}: {len(self.checks)} checks, {verdict}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines())

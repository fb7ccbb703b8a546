"""Error types raised across beds_lab.

Everything derives from ``BedsLabError`` which is a ``ValueError`` so callers
that only know about bad values keep working. ``exit_code`` is what the CLI
returns when the error escapes a scenario.
"""
from dataclasses import dataclass
from typing import List, Optional


class BedsLabError(ValueError):
    exit_code = 3

    def context(self) -> dict:
        return {}


class DomainError(BedsLabError):
    """Input outside the operation's mathematical domain."""


class DimensionError(BedsLabError):
    pass


class NumericFailure(BedsLabError):
    def __init__(self, message: str, residual: Optional[float] = None, step: Optional[int] = None):
        super().__init__(message)
        self.residual = residual
        self.step = step

    def context(self) -> dict:
        ctx = {}
        if self.residual is not None:
            ctx["residual"] = self.residual
        if self.step is not None:
            ctx["step"] = self.step
        return ctx


class PhysicalViolation(BedsLabError):
    """Energy below the Landauer floor."""


class InsufficientData(BedsLabError):
    pass


class InsufficientHistory(BedsLabError):
    pass


class DegenerateCoherence(BedsLabError):
    """kappa or kappa* is zero where a finite loss term needs it positive."""


class DivergenceError(BedsLabError):
    pass


@dataclass(frozen=True)
class ConfigIssue:
    line: Optional[int]
    key: Optional[str]
    message: str

    def __str__(self) -> str:
        where = f"line {self.line}" if self.line is not None else "config"
        if self.key:
            where += f" ({self.key})"
        return f"{where}: {self.message}"


class ConfigError(BedsLabError):
    exit_code = 2

    def __init__(self, issues: List[ConfigIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues) or "invalid config")

    def context(self) -> dict:
        return {"issues": [{"line": i.line, "key": i.key, "message": i.message} for i in self.issues]}


class ArtifactIOError(BedsLabError, OSError):
    exit_code = 4

    def __init__(self, message: str, path: str):
        super().__init__(f"{message}: {path}")
        self.path = str(path)

    def context(self) -> dict:
        return {"path": self.path}

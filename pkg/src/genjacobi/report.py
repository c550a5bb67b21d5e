"""Structured verification results.

A check run produces a :class:`VerifyReport`: one :class:`Case` per identity
instance, each carrying the exact residual as a string (rationals as "p/q",
polynomials in plain text).  A case whose precondition is not met is recorded
as skipped with the violated precondition; skipped cases never count as
passes, and ``all_pass`` quantifies over the non-skipped cases only.

Serialization is lossless: every number is an exact string, so JSON and CSV
round-trip without approximation.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .algebra import Poly, format_rational

ResidualLike = Union[Poly, Fraction, int]


def render_value(value: ResidualLike) -> str:
    """Exact text for a polynomial or rational result."""
    if isinstance(value, Poly):
        return str(value)
    return format_rational(value)


@dataclass(frozen=True)
class Case:
    """One checked identity instance."""

    label: str
    params: Mapping[str, str]
    n: Optional[int]
    residual: str
    passed: bool
    skipped: bool = False
    reason: str = ""

    @classmethod
    def check(cls, label: str, params: Mapping[str, str], n: Optional[int],
              residual: ResidualLike) -> "Case":
        """Record a computed residual; it passes iff exactly zero."""
        zero = residual.is_zero if isinstance(residual, Poly) else residual == 0
        return cls(label, dict(params), n, render_value(residual), bool(zero))

    @classmethod
    def skip(cls, label: str, params: Mapping[str, str], n: Optional[int],
             reason: str) -> "Case":
        """Record a case whose precondition is unmet."""
        return cls(label, dict(params), n, "", False, True, reason)

    def as_record(self) -> dict:
        rec = {
            "label": self.label,
            "params": dict(self.params),
            "n": self.n,
            "residual": self.residual,
            "pass": None if self.skipped else self.passed,
        }
        if self.skipped:
            rec["skipped"] = True
            rec["reason"] = self.reason
        return rec


def params_str(**kwargs) -> dict:
    """Render a parameter mapping with exact rational strings."""
    out = {}
    for key, value in kwargs.items():
        if isinstance(value, (int, Fraction)):
            out[key] = format_rational(value)
        else:
            out[key] = str(value)
    return out


@dataclass
class VerifyReport:
    """All cases from one suite run, plus the grid that generated them."""

    suite: str
    grid: Mapping[str, str] = field(default_factory=dict)
    seed: Optional[int] = None
    cases: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cases if not c.skipped)

    @property
    def counts(self) -> tuple:
        """(passed, failed, skipped)."""
        passed = sum(1 for c in self.cases if c.passed)
        skipped = sum(1 for c in self.cases if c.skipped)
        return passed, len(self.cases) - passed - skipped, skipped

    def add(self, case: Case) -> None:
        self.cases.append(case)

    def extend(self, cases: Sequence[Case]) -> None:
        self.cases.extend(cases)

    def merge(self, other: "VerifyReport") -> None:
        """Absorb another suite's cases, prefixing labels with its name."""
        for c in other.cases:
            self.cases.append(Case(f"{other.suite}: {c.label}", c.params, c.n,
                                   c.residual, c.passed, c.skipped, c.reason))

    def to_record(self) -> dict:
        return {
            "suite": self.suite,
            "grid": dict(self.grid),
            "seed": self.seed,
            "cases": [c.as_record() for c in self.cases],
            "all_pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "label", "params", "n", "residual", "pass", "reason"])
        for c in self.cases:
            pstr = ";".join(f"{k}={v}" for k, v in c.params.items())
            status = "skip" if c.skipped else ("pass" if c.passed else "fail")
            writer.writerow([self.suite, c.label, pstr,
                             "" if c.n is None else c.n, c.residual, status, c.reason])
        return buf.getvalue()

    def to_plain(self) -> str:
        lines = []
        for c in self.cases:
            pstr = ",".join(f"{k}={v}" for k, v in c.params.items())
            nstr = "" if c.n is None else f" n={c.n}"
            if c.skipped:
                lines.append(f"SKIP {c.label} [{pstr}]{nstr} ({c.reason})")
            elif c.passed:
                lines.append(f"PASS {c.label} [{pstr}]{nstr}")
            else:
                lines.append(f"FAIL {c.label} [{pstr}]{nstr} residual={c.residual}")
        passed, failed, skipped = self.counts
        verdict = "PASS" if self.all_pass else "FAIL"
        lines.append(f"suite {self.suite}: {len(self.cases)} cases, "
                     f"{passed} passed, {failed} failed, {skipped} skipped -> {verdict}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        def esc(s: str) -> str:
            return s.replace("^", r"\^{}").replace("_", r"\_")
        lines = [r"\begin{tabular}{llrll}",
                 r"label & params & $n$ & residual & result \\"]
        for c in self.cases:
            pstr = ", ".join(f"{k}={v}" for k, v in c.params.items())
            status = "skip" if c.skipped else ("pass" if c.passed else "fail")
            nstr = "" if c.n is None else str(c.n)
            lines.append(
                f"{esc(c.label)} & {esc(pstr)} & {nstr} & {esc(c.residual)} & {status} \\\\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "latex":
            return self.to_latex()
        return self.to_plain()

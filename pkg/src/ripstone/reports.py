"""Row-based pass/fail reports with stable table and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass


def fmt_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(fmt_value(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class ReportRow:
    subject: str
    expected: str
    computed: str
    passed: bool


def row(subject, expected, computed, passed=None) -> ReportRow:
    """Build a row; the verdict defaults to equality of the raw values."""
    if passed is None:
        passed = expected == computed
    return ReportRow(
        subject=subject,
        expected=fmt_value(expected),
        computed=fmt_value(computed),
        passed=bool(passed),
    )


@dataclass(frozen=True)
class Report:
    title: str
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> str:
        payload = {
            "schema": 1,
            "title": self.title,
            "passed": self.passed,
            "rows": [
                {
                    "subject": r.subject,
                    "expected": r.expected,
                    "computed": r.computed,
                    "passed": r.passed,
                }
                for r in self.rows
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def render_table(self) -> str:
        headers = ("subject", "expected", "computed", "status")
        cells = [
            (r.subject, r.expected, r.computed, "ok" if r.passed else "FAIL")
            for r in self.rows
        ]
        widths = [
            max(len(headers[i]), *(len(c[i]) for c in cells)) if cells else len(headers[i])
            for i in range(4)
        ]

        def line(parts):
            return "  ".join(p.ljust(w) for p, w in zip(parts, widths)).rstrip()

        out = [self.title, line(headers), line(tuple("-" * w for w in widths))]
        out.extend(line(c) for c in cells)
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(out)

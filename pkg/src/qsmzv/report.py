"""Pass/fail records shared by the identity checker and the suites."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffring import format_rational

STATUSES = ("pass", "fail", "skip")


def _render(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return format_rational(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


@dataclass
class Case:
    id: str
    status: str
    lhs: str = ""
    rhs: str = ""
    detail: str = ""

    def as_dict(self):
        return {"id": self.id, "status": self.status, "lhs": self.lhs, "rhs": self.rhs,
                "detail": self.detail}


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    seed: object = None
    cases: list = field(default_factory=list)

    def add(self, id, ok, lhs=None, rhs=None, detail=""):
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        self.cases.append(Case(str(id), status, _render(lhs), _render(rhs), detail))
        return status

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.cases:
            self.cases.append(Case(prefix + c.id, c.status, c.lhs, c.rhs, c.detail))

    @property
    def summary(self):
        out = {s: 0 for s in STATUSES}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def failures(self) -> int:
        return self.summary["fail"]

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def sorted_cases(self):
        return sorted(self.cases, key=lambda c: c.id)

    def as_dict(self):
        return {"suite": self.suite,
                "params": {k: _render(v) for k, v in self.params.items()},
                "seed": self.seed,
                "cases": [c.as_dict() for c in self.sorted_cases()],
                "summary": self.summary}

    def to_json(self, indent=2) -> str:
        return json.dumps(self.as_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["suite", "id", "status", "lhs", "rhs", "detail"])
        for c in self.sorted_cases():
            wr.writerow([self.suite, c.id, c.status, c.lhs, c.rhs, c.detail])
        return buf.getvalue()

    def exit_code(self) -> int:
        return min(self.failures, 125)

"""Structured verdicts with deterministic text and JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "n/a")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one named check.

    A failing verdict must carry at least one detail line so reports never
    say "fail" without saying why.
    """

    name: str
    status: str
    details: tuple[str, ...] = ()
    counters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and not self.details:
            raise ValueError(f"failing verdict {self.name!r} has no details")

    @staticmethod
    def from_bool(name: str, ok: bool, details: tuple[str, ...] = (),
                  counters: tuple[tuple[str, int], ...] = ()) -> "Verdict":
        if ok:
            return Verdict(name, "pass", details, counters)
        return Verdict(name, "fail", details or (f"{name} failed",), counters)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status,
                "details": list(self.details),
                "counters": {k: v for k, v in self.counters}}

    @staticmethod
    def from_json(obj: dict) -> "Verdict":
        return Verdict(obj["name"], obj["status"],
                       tuple(obj.get("details", ())),
                       tuple(sorted(obj.get("counters", {}).items())))


def report_merge(verdicts: list[Verdict]) -> dict:
    """Stable aggregate: counts by status, failures by name, exit code."""
    counts = {s: 0 for s in STATUSES}
    for v in verdicts:
        counts[v.status] += 1
    failures = [v.name for v in verdicts if v.status == "fail"]
    checked = counts["pass"] + counts["fail"]
    return {"total": len(verdicts), "pass": counts["pass"],
            "fail": counts["fail"], "n/a": counts["n/a"],
            "summary": f"{counts['pass']}/{checked}",
            "failures": failures,
            "exit_code": 1 if failures else 0}


def render_text(verdicts: list[Verdict]) -> str:
    """Human-readable report; byte-identical for identical verdict lists."""
    lines = []
    for v in verdicts:
        head = f"[{v.status.upper():4s}] {v.name}"
        if v.counters:
            head += "  (" + ", ".join(f"{k}={n}" for k, n in v.counters) + ")"
        lines.append(head)
        for d in v.details:
            lines.append(f"         {d}")
    merged = report_merge(verdicts)
    lines.append("")
    lines.append(f"{merged['summary']} checks passed"
                 + (f"; failures: {', '.join(merged['failures'])}"
                    if merged["failures"] else ""))
    return "\n".join(lines) + "\n"


def render_json(verdicts: list[Verdict]) -> str:
    payload = {"verdicts": [v.to_json() for v in verdicts],
               "summary": report_merge(verdicts)}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"

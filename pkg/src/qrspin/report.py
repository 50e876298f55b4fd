"""Uniform check reports shared by the verification functions and the CLI."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

PASS, FAIL, EVIDENCE, INVALID = "pass", "fail", "evidence", "invalid-input"


@dataclass
class CheckItem:
    key: str
    expected: str
    actual: str
    status: str


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    items: list = field(default_factory=list)
    elapsed_ms: int = 0
    mode: str = PASS      # EVIDENCE for conjectural regimes

    def add(self, key, expected, actual, ok: bool) -> None:
        if self.mode == EVIDENCE:
            # conjectural regime: the outcome is recorded, never a verdict
            status = EVIDENCE
            self.params["agreement"] = self.params.get("agreement", True) and bool(ok)
        else:
            status = PASS if ok else FAIL
        self.items.append(CheckItem(str(key), str(expected), str(actual), status))

    @property
    def status(self) -> str:
        if any(it.status == FAIL for it in self.items):
            return FAIL
        return self.mode

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def failures(self) -> list[CheckItem]:
        return [it for it in self.items if it.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "items": [vars(it) for it in self.items],
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        items = [CheckItem(**it) for it in d["items"]]
        mode = d["status"] if d["status"] in (EVIDENCE, INVALID) else PASS
        return cls(d["command"], dict(d["params"]), items, d["elapsed_ms"], mode)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "expected", "actual", "status"])
        for it in self.items:
            w.writerow([it.key, it.expected, it.actual, it.status])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command} {self.params}"]
        width = max((len(it.key) for it in self.items), default=0)
        for it in self.items:
            lines.append(f"  {it.key:<{width}}  {it.status:<8}  expected={it.expected}  actual={it.actual}")
        lines.append(f"status: {self.status} ({len(self.items)} items, {self.elapsed_ms} ms)")
        return "\n".join(lines)


__all__ = ["PASS", "FAIL", "EVIDENCE", "INVALID", "CheckItem", "Report"]

"""Verification report records shared by the identity checkers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass
class VerificationReport:
    check_id: str
    n: int
    status: str  # "pass" | "fail"
    counterexample: dict | None
    ms: float
    detail: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def json_line(self) -> str:
        obj = {
            "id": self.check_id,
            "n": self.n,
            "status": self.status,
            "counterexample": self.counterexample,
            "ms": round(self.ms, 3),
        }
        if self.detail is not None:
            obj["detail"] = self.detail
        return json.dumps(obj, separators=(",", ":"))

    def text_line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        extra = ""
        if self.detail:
            extra = " " + json.dumps(self.detail, separators=(",", ":"))
        return f"{mark} {self.check_id} n={self.n} ({self.ms:.1f} ms){extra}"

"""Machine-readable verdicts for single theorem or conjecture instances."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckReport:
    check: str
    params: Dict[str, Any]
    verdict: str
    witness: Optional[Dict[str, Any]] = None
    # "theorem" failures are bugs; "conjecture" failures are findings
    kind: str = field(default="theorem", compare=False)

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, NOT_APPLICABLE):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_json(self) -> Dict[str, Any]:
        out = {"check": self.check, "params": self.params, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "CheckReport":
        return cls(obj["check"], dict(obj["params"]), obj["verdict"], obj.get("witness"))


def verdict(ok: bool) -> str:
    return PASS if ok else FAIL

"""
Command Reports

Every command produces a Report: the inputs digest, the verdicts of its
checks, the seed and bounds it ran with, and the wall time. The text and
JSON renderings leave wall time out unless asked, so identical invocations
print identical bytes.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from core.plugin_base import PluginResult, Verdict


def inputs_digest(inputs: Dict[str, Any]) -> str:
    """sha256 over the canonical JSON of the command inputs"""
    canonical = json.dumps(inputs, sort_keys=True, default=str, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class Report:
    command: str
    inputs: Dict[str, Any]
    verdict: Verdict
    message: str
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)
    seed: int = 0
    bounds: Dict[str, Any] = field(default_factory=dict)
    data: Dict[str, Any] = field(default_factory=dict)
    wall_time_ms: int = 0

    @classmethod
    def from_result(cls, command: str, inputs: Dict[str, Any], result: PluginResult,
                    seed: int, bounds: Dict[str, Any], wall_time_ms: int) -> "Report":
        data = {k: v for k, v in result.data.items()
                if k not in ("plugin_name", "action", "execution_time_ms")}
        return cls(command, inputs, result.verdict, result.message, list(result.items),
                   list(result.lines), seed, dict(bounds), data, wall_time_ms)

    @property
    def digest(self) -> str:
        return inputs_digest(self.inputs)

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "command": self.command,
            "inputs_digest": self.digest,
            "verdict": self.verdict.value,
            "message": self.message,
            "verdicts": self.verdicts,
            "seed": self.seed,
            "bounds": self.bounds,
        }
        if self.data:
            out["data"] = self.data
        if timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2, default=str)

    def to_text(self, timing: bool = False) -> str:
        out = list(self.lines)
        out.append(f"{self.command}: {self.verdict.value.upper()} - {self.message}")
        bounds = ", ".join(f"{k}={v}" for k, v in sorted(self.bounds.items()))
        footer = f"seed={self.seed}" + (f", {bounds}" if bounds else "") + f", inputs={self.digest[:12]}"
        if timing:
            footer += f", wall_time={self.wall_time_ms}ms"
        out.append(footer)
        return "\n".join(out)

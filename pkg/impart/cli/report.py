"""
Run report emitted by every computing subcommand.
Rendered as sorted "key: value" lines or as one JSON object.
"""

import json
from dataclasses import dataclass
from typing import Any, List, Optional

from ..config import REPORT_SCHEMA_VERSION


@dataclass
class RunReport:
    """
    Result of one CLI invocation.

    Attributes:
        command: Subcommand name followed by its arguments
        instance: Description of the input (order, size, parameter, k, ...)
        verdict: "yes" / "no" for decision commands
        value: Computed number (parameter value, p(G, k), threshold, ...)
        witness: Vertex list in the input graph's ids
        trace: Solver trace or other supporting detail
        wall_time_ms: Measured run time, emitted only on request
    """

    command: List[str]
    instance: dict
    verdict: Optional[str] = None
    value: Any = None
    witness: Optional[List[int]] = None
    trace: Optional[dict] = None
    wall_time_ms: Optional[float] = None

    def to_dict(self, timing: bool = False) -> dict:
        payload = {
            "schema": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "instance": self.instance,
            "verdict": self.verdict,
            "value": self.value,
            "witness": self.witness,
            "trace": self.trace,
        }
        if timing:
            payload["wall_time_ms"] = self.wall_time_ms
        return payload

    def render(self, as_json: bool = False, timing: bool = False) -> str:
        payload = self.to_dict(timing)
        if as_json:
            return json.dumps(payload, sort_keys=True) + "\n"

        lines = []
        for key in sorted(payload):
            value = payload[key]
            if value is None:
                continue
            text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            lines.append(f"{key}: {text}")
        return "\n".join(lines) + "\n"

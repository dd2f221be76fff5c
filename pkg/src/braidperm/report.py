"""Structured pass/fail records for the verification suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def jsonable(value):
    """Coerce witness values to JSON-stable types; unknown objects print as str."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class ClaimCheck:
    """One verified statement: claim tag, parameters, witness data, verdict."""

    claim: str
    parameters: dict
    witness: dict
    passed: bool

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "parameters": jsonable(self.parameters),
            "witness": jsonable(self.witness),
            "pass": self.passed,
        }

    def text_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        line = f"{status} {self.claim}" + (f" [{params}]" if params else "")
        if not self.passed:
            line += " witness=" + json.dumps(jsonable(self.witness), sort_keys=True)
        return line


@dataclass
class VerificationReport:
    """All claim checks of one run, serializable deterministically."""

    seed: int
    config: dict
    entries: list[ClaimCheck] = field(default_factory=list)
    schema: int = 1

    @property
    def all_pass(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "seed": self.seed,
            "config": jsonable(self.config),
            "claims": [entry.to_dict() for entry in self.entries],
            "all_pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [entry.text_line() for entry in self.entries]
        passed = sum(entry.passed for entry in self.entries)
        lines.append(f"{passed}/{len(self.entries)} checks passed (seed={self.seed})")
        return "\n".join(lines) + "\n"

"""Experiment reports and their JSON serialization."""

import json
import os
import tempfile
from dataclasses import dataclass, field

__version__ = "0.1.0"
PROVENANCE = f"realqm {__version__}"


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    seed: int
    params: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    provenance: str = PROVENANCE

    @property
    def passed(self):
        return all(self.verdicts.values())

    def to_dict(self):
        return {
            "name": self.name,
            "seed": int(self.seed),
            "params": _plain(self.params),
            "metrics": {k: float(v) for k, v in self.metrics.items()},
            "verdicts": {k: bool(v) for k, v in self.verdicts.items()},
            "passed": self.passed,
            "provenance": self.provenance,
        }

    def to_json(self):
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, payload):
        return cls(
            name=payload["name"],
            seed=int(payload["seed"]),
            params=dict(payload.get("params", {})),
            metrics=dict(payload.get("metrics", {})),
            verdicts=dict(payload.get("verdicts", {})),
            provenance=payload.get("provenance", PROVENANCE),
        )


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item"):
        return value.item()
    return value


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def aggregate(reports, seed, params=None):
    """One document for a multi-suite run."""
    return {
        "name": "check",
        "seed": int(seed),
        "params": _plain(params or {}),
        "passed": all(r.passed for r in reports),
        "provenance": PROVENANCE,
        "reports": [r.to_dict() for r in reports],
    }


def write_atomic(path, text):
    """Write ``text`` to ``path`` via a temporary file in the same directory."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".realqm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

"""Verification report structure with lossless JSON round-tripping."""

import json
from dataclasses import dataclass

from .radii import RadiusResult

__all__ = ["VerificationReport"]

SCHEMA = 1

# Fields that legitimately differ between two otherwise identical runs.
VOLATILE_FIELDS = ("timestamp", "runtime_s")


@dataclass
class VerificationReport:
    """Everything one verification run asserts, JSON-serializable."""

    theorem: str
    description: str
    params: dict
    radius: RadiusResult
    grid: dict
    corpus: dict
    tolerance: float
    backend: str
    max_value: float
    margin: float
    violations: list
    runtime_s: float
    timestamp: str
    schema: int = SCHEMA

    def to_dict(self):
        return {
            "schema": self.schema,
            "theorem": self.theorem,
            "description": self.description,
            "params": dict(self.params),
            "radius": self.radius.to_dict(),
            "grid": dict(self.grid),
            "corpus": dict(self.corpus),
            "tolerance": self.tolerance,
            "backend": self.backend,
            "max_value": self.max_value,
            "margin": self.margin,
            "violations": [dict(v) for v in self.violations],
            "runtime_s": self.runtime_s,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, doc):
        if doc.get("schema") != SCHEMA:
            raise ValueError("unsupported report schema")
        return cls(
            theorem=str(doc["theorem"]),
            description=str(doc["description"]),
            params=dict(doc["params"]),
            radius=RadiusResult.from_dict(doc["radius"]),
            grid=dict(doc["grid"]),
            corpus=dict(doc["corpus"]),
            tolerance=float(doc["tolerance"]),
            backend=str(doc["backend"]),
            max_value=float(doc["max_value"]),
            margin=float(doc["margin"]),
            violations=[dict(v) for v in doc["violations"]],
            runtime_s=float(doc["runtime_s"]),
            timestamp=str(doc["timestamp"]),
            schema=int(doc["schema"]),
        )

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def canonical_dict(self):
        """The report without its volatile fields, for determinism checks."""
        doc = self.to_dict()
        for key in VOLATILE_FIELDS:
            doc.pop(key, None)
        return doc

    def save(self, path):
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_json())

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

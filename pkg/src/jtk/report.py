"""Check reports and their canonical JSON form."""
import json
from dataclasses import dataclass, field
from typing import List, Optional

from .matrix import PolyMatrix


@dataclass(frozen=True)
class CheckResult:
    id: str
    anchor: str
    passed: bool
    max_degree: int = -1
    nonzero: int = 0
    residual: Optional[PolyMatrix] = None
    note: str = ""

    @classmethod
    def from_residual(cls, id, anchor, residual, keep=False):
        passed = residual.is_zero()
        return cls(id, anchor, passed, residual.max_degree(), residual.nonzero_count(),
                   residual if keep and not passed else None)

    @classmethod
    def from_flag(cls, id, anchor, passed, note=""):
        return cls(id, anchor, bool(passed), note=note)

    def to_obj(self):
        obj = {"id": self.id, "anchor": self.anchor, "passed": self.passed,
               "max_degree": self.max_degree, "nonzero": self.nonzero}
        if self.note:
            obj["note"] = self.note
        if self.residual is not None:
            obj["residual"] = self.residual.to_json_obj()
        return obj

    @classmethod
    def from_obj(cls, obj):
        residual = obj.get("residual")
        return cls(obj["id"], obj["anchor"], obj["passed"], obj["max_degree"], obj["nonzero"],
                   PolyMatrix.from_json_obj(residual) if residual is not None else None,
                   obj.get("note", ""))


@dataclass
class CheckReport:
    suite: str
    map: str
    spins: List[List[int]]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def verdict(self):
        return "pass" if all(c.passed for c in self.checks) else "fail"

    @property
    def passed(self):
        return self.verdict == "pass"

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, result):
        self.checks.append(result)

    def extend(self, results):
        self.checks.extend(results)

    def sorted(self):
        return CheckReport(self.suite, self.map, self.spins, sorted(self.checks, key=lambda c: c.id))

    def to_obj(self):
        return {"suite": self.suite, "map": self.map, "spins": self.spins,
                "verdict": self.verdict, "checks": [c.to_obj() for c in self.checks]}

    def to_json(self, indent=None):
        return json.dumps(self.to_obj(), sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(obj["suite"], obj["map"], obj["spins"], [CheckResult.from_obj(c) for c in obj["checks"]])

    def to_text(self):
        lines = [f"suite {self.suite}  map {self.map}  spins {self.spins}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            detail = "" if c.passed else f"  (degree {c.max_degree}, {c.nonzero} nonzero)"
            note = f"  [{c.note}]" if c.note else ""
            lines.append(f"  {status}  {c.id}  <{c.anchor}>{detail}{note}")
        n_fail = len(self.failures())
        lines.append(f"verdict: {self.verdict} ({len(self.checks) - n_fail}/{len(self.checks)} passed)")
        return "\n".join(lines)


def emit_json(obj):
    """Canonical JSON text for a report or a matrix."""
    if isinstance(obj, PolyMatrix):
        return obj.to_json()
    if isinstance(obj, CheckReport):
        return obj.to_json()
    raise TypeError(f"cannot emit {type(obj).__name__} as JSON")

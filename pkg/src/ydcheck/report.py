"""Law-check reports and deterministic JSON rendering.

A Report aggregates per-law results for one (suite, instance, config) run.
Witnesses are rendered as canonical coefficient/basis-label text so a failing
law is reproducible by eye.  The JSON contains no timestamps: identical
configs must produce byte-identical files.
"""

import json
from dataclasses import dataclass, field


SCHEMA_VERSION = 1


@dataclass
class LawResult:
    law: str          # stable law id, e.g. "antipode-left"
    statement: str    # human-readable form of the law being checked
    ok: bool
    witness: str | None = None

    def as_dict(self):
        d = {"law": self.law, "statement": self.statement, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    instance: str
    field_name: str
    seed: int
    samples: int
    laws: list = field(default_factory=list)

    def add(self, law, statement, ok, witness=None):
        self.laws.append(LawResult(law, statement, ok, witness))

    def check(self, law, statement, lhs, rhs, context=""):
        """Record an exact-equality law; on failure render both sides."""
        ok = lhs == rhs
        witness = None
        if not ok:
            witness = "%slhs = %r ; rhs = %r" % (context and context + " ; ", lhs, rhs)
        self.add(law, statement, ok, witness)
        return ok

    @property
    def ok(self):
        return all(r.ok for r in self.laws)

    def failures(self):
        return [r for r in self.laws if not r.ok]

    def as_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "instance": self.instance,
            "field": self.field_name,
            "seed": self.seed,
            "samples": self.samples,
            "ok": self.ok,
            "laws": [r.as_dict() for r in self.laws],
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def summary(self):
        lines = []
        for r in self.laws:
            lines.append("%-4s %s" % ("ok" if r.ok else "FAIL", r.law))
            if not r.ok and r.witness:
                lines.append("     witness: %s" % r.witness)
        return "\n".join(lines)

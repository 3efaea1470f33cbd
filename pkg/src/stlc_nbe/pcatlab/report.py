"""Outcome of a law suite: how many cases ran and which ones failed."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..codec import ctxt_to_json, subst_to_json, term_to_json, ty_to_json
from ..renaming import Rnm
from ..substitution import Subst, lift_rnm
from ..syntax import Ctxt, Tm, Ty

__all__ = ["LawReport", "witness_json"]

MAX_KEPT = 20   # counterexamples stored per suite; the count keeps going


@dataclass
class LawReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    n_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.n_failures == 0

    def tick(self, n: int = 1) -> None:
        self.cases += n

    def fail(self, law: str, **witness) -> None:
        self.n_failures += 1
        if len(self.failures) < MAX_KEPT:
            self.failures.append({"law": law, **witness})

    def check(self, ok: bool, law: str, **witness) -> None:
        self.tick()
        if not ok:
            self.fail(law, **witness)

    def merge(self, other: LawReport) -> LawReport:
        self.cases += other.cases
        self.n_failures += other.n_failures
        self.failures.extend(other.failures[:max(0, MAX_KEPT - len(self.failures))])
        return self

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "passed": self.passed,
                "n_failures": self.n_failures,
                "failures": [{k: witness_json(v) for k, v in f.items()}
                             for f in self.failures]}

    def summary(self) -> str:
        verdict = "ok" if self.passed else f"FAILED ({self.n_failures})"
        return f"{self.suite}: {self.cases} cases, {verdict}"


def witness_json(v):
    if isinstance(v, Tm):
        return {"ctxt": ctxt_to_json(v.ctxt), "ty": ty_to_json(v.ty), "term": term_to_json(v)}
    if isinstance(v, Subst):
        return subst_to_json(v)
    if isinstance(v, Rnm):
        return subst_to_json(lift_rnm(v))
    if isinstance(v, Ctxt):
        return ctxt_to_json(v)
    if isinstance(v, Ty):
        return ty_to_json(v)
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [witness_json(x) for x in v]
    return repr(v)

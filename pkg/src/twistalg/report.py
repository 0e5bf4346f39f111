"""Check records, verdicts and the JSON report layout."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, NamedTuple, Union

from .matrix import AlgebraMatrix
from .phase import PhaseCoefficient
from .polynomial import Polynomial
from .rewrite import CompletionLimitError

SCHEMA_VERSION = 1
PASS, FAIL, SKIPPED = "pass", "fail", "skipped-structural"


class Verdict(NamedTuple):
    ok: bool
    witness: str = ""
    metrics: dict = {}


Outcome = Union[Polynomial, PhaseCoefficient, AlgebraMatrix, Verdict, bool]


@dataclass
class CheckResult:
    id: str
    statement: str
    paper_ref: str
    status: str
    witness: str = ""
    metrics: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Check:
    """A named identity with a thunk computing its residual."""

    id: str
    statement: str
    paper_ref: str
    run: Callable[[], Outcome] = None  # type: ignore[assignment]
    structural: bool = False


def matrix_witness(m: AlgebraMatrix) -> str:
    return "; ".join(f"[{i + 1},{j + 1}] {e}" for i, j, e in m.entries() if e)


def judge(out: Outcome) -> Verdict:
    if isinstance(out, Verdict):
        return out
    if isinstance(out, bool):
        return Verdict(out, "" if out else "false")
    if isinstance(out, Polynomial):
        return Verdict(not out, "" if not out else out.to_text(), {"residual_terms": len(out)})
    if isinstance(out, PhaseCoefficient):
        return Verdict(not out, "" if not out else str(out))
    if isinstance(out, AlgebraMatrix):
        z = out.is_zero()
        return Verdict(z, "" if z else matrix_witness(out))
    raise TypeError(f"cannot judge {type(out).__name__}")


def execute(check: Check) -> CheckResult:
    if check.structural:
        return CheckResult(check.id, check.statement, check.paper_ref, SKIPPED,
                           metrics={"reason": "structural argument, not machine-checked"})
    t0 = time.perf_counter()
    try:
        v = judge(check.run())
        metrics = dict(v.metrics)
        status = PASS if v.ok else FAIL
        witness = v.witness if not v.ok else ""
        if status == FAIL and not witness:
            witness = "identity does not hold"
    except CompletionLimitError as e:
        status, witness, metrics = FAIL, f"completion limit exceeded: {e}", {"limit_exceeded": True}
    metrics["ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return CheckResult(check.id, check.statement, check.paper_ref, status, witness, metrics)


def summarize(results) -> dict:
    out = {PASS: 0, FAIL: 0, "skipped": 0}
    for r in results:
        out["skipped" if r.status == SKIPPED else r.status] += 1
    return out


def build_report(suite: str, results, timing: bool = True) -> dict:
    checks = []
    for r in sorted(results, key=lambda r: r.id):
        d = r.to_dict()
        if not timing:
            d["metrics"] = {k: v for k, v in d["metrics"].items() if k != "ms"}
        checks.append(d)
    return {"schema_version": SCHEMA_VERSION, "suite": suite, "checks": checks, "summary": summarize(results)}


def format_text(report: dict) -> str:
    lines = []
    for c in report["checks"]:
        lines.append(f"{c['status']:<19} {c['id']}  {c['statement']}")
        if c["witness"]:
            lines.append(f"{'':<19} witness: {c['witness']}")
    s = report["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"

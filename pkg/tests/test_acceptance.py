"""The ten acceptance criteria, exact with zero tolerance.

Each criterion runs a fixed selection of report checks, requires every one of
them to pass (structural markers aside) and enforces its time bound. One
summary line per criterion is printed whether it passes or fails.
"""

from __future__ import annotations

import sys
import time

import pytest

from twistalg import suites
from twistalg.report import FAIL, PASS, SKIPPED, execute


def _ids(suite, keep=lambda i: True):
    return [c for c in suites.checks(suite) if keep(c.id)]


def _is_C(i):
    return i.startswith("so51.C.")


CRITERIA = {
    1: ("SL relation table and star closure", 1.0, lambda: _ids("appendix-a")),
    2: ("determinant: det-cond, det2, 8 Laplace expansions, display, centrality", 10.0,
        lambda: _ids("determinant", lambda i: not i.startswith("det.complement."))),
    3: ("Hopf axioms on all 16 generators and complement commutation", 30.0,
        lambda: _ids("hopf") + _ids("determinant", lambda i: i.startswith("det.complement."))),
    4: ("metric on minors, epsilon relations, antisymmetry, Plucker, X^t g X, h = T^t g T", 60.0,
        lambda: _ids("so51", lambda i: not _is_C(i)) + _ids("coaction", lambda i: i == "coaction.plucker")),
    5: ("coaction: j, displays, infradius, phases, forced relations, m -> delta, nu, C^t g C", 60.0,
        lambda: _ids("coaction", lambda i: i != "coaction.plucker") + _ids("so51", _is_C)),
    6: ("instanton and family: p, omega, u~, P', Murray-von Neumann, omega~", 120.0,
        lambda: _ids("instanton") + _ids("family") + _ids("mvn")),
    7: ("M_theta: display, phases, centrality, hyperboloid, rho^2 pairing, boundary", 30.0,
        lambda: _ids("mtheta") + _ids("boundary")),
    8: ("engine integrity: ordering, validators, rewriting oracle", 60.0, lambda: _ids("oracle")),
    9: ("star-product consistency of degrees and phases", 1.0, lambda: _ids("star-consistency")),
    10: ("classical limit of det, complements and phase tables", 5.0, lambda: _ids("classical")),
}


def evaluate(n: int):
    title, bound, select = CRITERIA[n]
    t0 = time.perf_counter()
    results = [execute(c) for c in select()]
    elapsed = time.perf_counter() - t0
    failed = [r for r in results if r.status == FAIL]
    ran = [r for r in results if r.status == PASS]
    ok = not failed and elapsed < bound and ran
    line = (f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}  "
            f"[{len(ran)} pass, {len(failed)} fail, {sum(r.status == SKIPPED for r in results)} skipped, "
            f"{elapsed:.2f}s of {bound:g}s]")
    return ok, line, failed, elapsed, bound


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line, failed, elapsed, bound = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
        for r in failed:
            print(f"    {r.id}: {r.witness[:160]}")
    assert not failed, "; ".join(f"{r.id}: {r.witness[:200]}" for r in failed)
    assert elapsed < bound


if __name__ == "__main__":
    bad = 0
    for n in sorted(CRITERIA):
        ok, line, failed, *_ = evaluate(n)
        print(line)
        bad += not ok
    sys.exit(1 if bad else 0)

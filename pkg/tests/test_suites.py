import pytest

from twistalg import suites
from twistalg.report import SKIPPED, Check, build_report, execute

REQUIRED = [
    "hopf.coassoc.A[1][1]", "hopf.coassoc.A[4][4]", "hopf.antipode.left.[2][3]", "so51.metric.1.2",
    "so51.metric.6.6", "coaction.transf4.x", "coaction.transf4.alpha", "coaction.transf4.beta",
    "coaction.transf4.rho", "coaction.plucker", "family.utnorm", "family.pprime.idempotent",
    "mvn.left", "mvn.right", "mtheta.hyperboloid", "boundary.phases",
]


@pytest.fixture(scope="module")
def everything():
    return suites.checks("all")


def test_ids_are_unique(everything):
    ids = [c.id for c in everything]
    assert len(ids) == len(set(ids))


def test_required_keys_present(everything):
    ids = {c.id for c in everything}
    assert [k for k in REQUIRED if k not in ids] == []


def test_every_check_has_a_reference(everything):
    assert all(c.paper_ref and c.statement for c in everything)


def test_structural_markers(everything):
    marked = sorted(c.id for c in everything if c.structural)
    assert marked == ["hopf.antipode.ideal", "instanton.charge", "instanton.selfdual", "so51.C.det"]


def test_structural_checks_are_skipped_not_run():
    r = execute(Check("x", "s", "r", structural=True))
    assert r.status == SKIPPED and not r.witness


def test_failures_always_carry_a_witness():
    r = execute(Check("x", "s", "r", lambda: False))
    assert r.status == "fail" and r.witness


def test_known_findings():
    """Two stated identities do not hold as written; both are reported as failures."""
    h = execute(suites.find("so51", "so51.h_tgt"))
    scaled = execute(suites.find("so51", "so51.tgt_scaled"))
    assert h.status == "fail" and scaled.status == "pass"
    assert execute(suites.find("sp-ideal", "sp.pi_I.hom")).status == "fail"


def test_mvn_records_the_naive_clearing():
    r = execute(suites.find("mvn", "mvn.left"))
    assert r.passed
    assert r.metrics["cleared_form_entries_nonzero"] > 0


def test_report_is_sorted_and_versioned():
    results = [execute(c) for c in suites.checks("star-consistency")]
    rep = build_report("star-consistency", results[::-1], timing=False)
    assert [c["id"] for c in rep["checks"]] == sorted(c["id"] for c in rep["checks"])
    assert rep["schema_version"] == 1
    assert all("ms" not in c["metrics"] for c in rep["checks"])


def test_unknown_suite():
    with pytest.raises(suites.UnknownSuite):
        suites.checks("nope")

import json

import pytest

from oracles import brute_edges
import redpower.theorems as th
from redpower.graph_core import SimpleGraph, component_masks
from redpower.group_core import abelian_invariants, build_group, cyclic, is_abelian
from redpower.invariants import Caps
from redpower.theorems import (CHECKS, FAIL, PASS, SKIPPED, Claim, TheoremCheck, UnknownCheck,
                               default_catalog, run_check, run_suite)


@pytest.fixture(scope="module")
def suite32():
    return run_suite(default_catalog(32))


def _iso_key(g):
    return ("ab", abelian_invariants(g)) if is_abelian(g) else ("na", g.label)


# --- catalog ----------------------------------------------------------------------

def test_catalog_order_8():
    cat = default_catalog(8)
    keys = {_iso_key(g) for g in cat}
    for spec in ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "D6", "D8", "Q8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2"]:
        assert _iso_key(build_group(spec)) in keys, spec
    assert "SD16" not in [g.label for g in cat]
    assert len(keys) == len(cat)  # no duplicated isomorphism types
    assert all(2 <= g.order <= 8 for g in cat)


def test_catalog_order_16_has_sd16():
    assert "SD16" in [g.label for g in default_catalog(16)]


def test_catalog_below_two_is_empty():
    assert default_catalog(1) == []


def test_catalog_extra_files(tmp_path):
    f = tmp_path / "klein.json"
    f.write_text(json.dumps({"table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]}))
    cat = default_catalog(4, [f])
    assert cat[-1].label == "klein" and cat[-1].order == 4


# --- single checks -------------------------------------------------------------------

def test_t2_z12():
    r = run_check("T2", cyclic(12))
    assert r.status == PASS
    assert r.expected["omega(RP*)"] == 3 and r.computed["omega(RP*)"] == 3


def test_t23_z5():
    r = run_check("T23", cyclic(5))
    assert r.status == PASS
    assert r.computed["c(RP*) = c(P*) + sum m_p (p-2)"] == 4


def test_t23_d6_against_brute_components():
    g = build_group("D6")
    r = run_check(CHECKS["T23"], g)
    assert r.status == PASS
    def comps(family):
        graph = SimpleGraph.from_edges(5, brute_edges(g.table, family, True))
        return len(component_masks(graph))
    assert comps("power") == 4 and comps("reduced") == 5
    assert r.expected["c(RP*) = c(P*) + sum m_p (p-2)"] == 5


def test_t7_small_filter():
    cat = [build_group(s) for s in ("Z4", "Q8", "Z8", "D8")]
    rep = run_suite(cat, {"T7"})
    assert [r.status for r in rep.results] == [PASS] * 4
    stars = [r.group for r in rep.results if r.computed["RP* star iff G in {Z_4, Q_8}"]]
    assert stars == ["Z4", "Q8"]


def test_t9_capped_catalog_passes():
    rep = run_suite(default_catalog(40), {"T9"}, workers=4)
    assert rep.count(FAIL) == 0 and rep.count(SKIPPED) == 0


def test_t6_positive_and_negative_at_16():
    rep = run_suite(default_catalog(16), {"T6"})
    key = "RP* complete bipartite iff G in {Z_p^2, Z_pq, Q_8}"
    got = {r.group: r.computed[key] for r in rep.results}
    assert rep.ok
    assert all(got[s] for s in ("Z4", "Z9", "Z6", "Q8"))
    assert not got["D8"] and not got["E2^2"]


def test_unknown_check():
    with pytest.raises(UnknownCheck):
        run_suite(default_catalog(4), {"T99"})
    with pytest.raises(UnknownCheck):
        run_check("T0", cyclic(4))


def test_cap_produces_skip_not_failure():
    r = run_check("T9", cyclic(12), Caps(perfect_cap=5))
    assert r.status == SKIPPED and r.reason.startswith("cap")
    r = run_check("T21", cyclic(16), Caps(hamiltonian_cap=8))
    assert r.status == SKIPPED and "cap" in r.reason


def test_applicability_skips():
    assert run_check("T17", build_group("D8")).reason == "not cyclic"
    assert run_check("T3", cyclic(8)).reason == "cyclic group"
    assert run_check("T7", cyclic(2)).status == SKIPPED


def test_failing_check_carries_witness():
    bogus = TheoremCheck("TX", "always wrong", "", th._always,
                         lambda ctx: [Claim("order is 1", 1, ctx.n, ctx.n == 1)])
    r = th._run_in_context(bogus, th.GroupContext(cyclic(6)))
    assert r.status == FAIL
    assert r.witness == {"order is 1": {"expected": 1, "computed": 6}}


def test_checks_detect_a_broken_solver(monkeypatch):
    # an off-by-one chromatic solver must be caught by T2
    real = th._SOLVERS["chi"]
    monkeypatch.setitem(th._SOLVERS, "chi", lambda g, c: real(g, c) + 1)
    r = run_check("T2", cyclic(12))
    assert r.status == FAIL and "chi(RP*)" in r.witness


def test_checks_detect_a_broken_graph(monkeypatch):
    # dropping one edge from RP* breaks the colouring/cut/shape claims somewhere
    real = th.GroupContext.graphs.func

    def broken(self):
        gs = real(self)
        e = gs["RP*"].edges()
        if e:
            gs["RP*"] = SimpleGraph.from_edges(gs["RP*"].n, e[1:], gs["RP*"].labels)
        return gs

    monkeypatch.setattr(th.GroupContext, "graphs", property(broken))
    rep = run_suite([cyclic(8), build_group("Q8")], {"T6", "T7", "T2"})
    assert rep.count(FAIL) >= 2


# --- suite ----------------------------------------------------------------------------

def test_full_suite_32_has_no_failures(suite32):
    assert suite32.failures == [], suite32.to_table()


def test_suite_totals_conserved(suite32):
    s = suite32.summary
    assert s[PASS] + s[FAIL] + s[SKIPPED] == s["total"] == len(CHECKS) * s["groups"]


def test_skips_have_reasons(suite32):
    assert all(r.reason for r in suite32.results if r.status == SKIPPED)


def test_suite_reproducible_and_parallel_equivalent():
    cat = default_catalog(20)
    a = run_suite(cat).to_json()
    b = run_suite(cat).to_json()
    c = run_suite(cat, workers=3).to_json()
    assert a == b == c


def test_report_serialisation(suite32):
    doc = json.loads(suite32.to_json())
    assert doc["summary"]["fail"] == 0
    assert {"check", "group", "status", "expected", "computed", "witness", "reason"} <= set(doc["results"][0])
    text = suite32.to_table()
    assert text.splitlines()[-1].startswith("total=")
    assert len([l for l in text.splitlines() if l.startswith("T")]) == len(CHECKS)


def test_every_check_applies_somewhere(suite32):
    for cid in CHECKS:
        assert any(r.status == PASS for r in suite32.by_check(cid)), cid


def test_corrected_claims_are_annotated(suite32):
    notes = {(r.check_id, r.group) for r in suite32.results if r.reason and r.status == PASS}
    assert ("T6", "Z6") in notes and ("T6", "Q8") in notes
    assert ("T22", "SD24") in notes

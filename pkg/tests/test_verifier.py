from __future__ import annotations

import copy
import json

import pytest

from semiderive import verifier as V
from conftest import TET8, TRI3, TRI7


def test_reference_data_loads():
    ref = V.load_reference()
    assert len(ref["example1"]["cells"]) == 3
    assert all(len(row) == 10 for row in ref["example1"]["cells"])
    assert len(ref["jordan_table"]["cells"]) == 10


def test_example2_cells_match():
    r = V.run_example(2)
    assert r.verdict == "pass" and r.details == {"cells": 12, "matched": 12}


def test_tampered_cell_is_reported():
    ref = copy.deepcopy(V.load_reference())
    ref["example2"]["cells"][1][2] = "1_7"
    r = V.run_example(2, ref)
    assert r.verdict == "fail"
    assert r.witnesses == [{
        "derivation": "1_4 3_1 5_2", "element": "1_2 3_5",
        "computed": "1_4 3_3", "expected": "1_7",
    }]


def test_example1_mismatches_are_confined_to_three_columns():
    r = V.run_example(1)
    cols = {w["element"] for w in r.witnesses}
    assert r.details["cells"] == 30
    assert cols == {"1_6 5_1", "1_5 3_1 5_1", "1_4 3_2 5_1"}


def test_claim_result_invariants():
    with pytest.raises(ValueError):
        V.ClaimResult("x", "y", "fail")
    with pytest.raises(ValueError):
        V.ClaimResult("x", "y", "maybe")
    c = V.ClaimResult("x", "y", "pass", wall_time=3.0)
    assert "wall_time" not in c.to_dict()


def test_run_proposition_examples():
    r = V.run_proposition(1, TRI7)
    assert r.verdict == "pass"
    assert r.details["alphas"] == 4 and r.details["pairs_checked"] == 4 * 36 * 36
    r = V.run_proposition(4, TRI3)
    assert r.verdict == "pass" and r.details["claimed_size"] == 8


def test_run_proposition_rejects_incompatible_specs():
    with pytest.raises(V.IncompatibleSpec):
        V.run_proposition(4, TET8)
    with pytest.raises(V.IncompatibleSpec):
        V.run_proposition(14, TET8)
    with pytest.raises(V.IncompatibleSpec):
        V.run_proposition(15, TRI7)


def test_failed_proposition_carries_witnesses():
    r = V.run_proposition(10, TRI3)
    assert r.verdict == "fail" and r.witnesses
    assert all("lhs" in w and "rhs" in w for w in r.witnesses)


def test_restricted_report_has_one_entry():
    rep = V.full_report(V.ReportConfig(only=("example1",)))
    assert [c.id for c in rep.claims] == ["example1"]
    doc = json.loads(rep.to_json())
    assert set(doc) == {"version", "claims"}
    assert set(doc["claims"][0]) == {"id", "scope", "verdict", "details", "witnesses"}


def test_k4_censuses():
    rep = V.full_report(V.ReportConfig(only=("census-nilpotent", "census-fibonacci")))
    nil, fib = rep.claims
    assert nil.details["counts"]["4"] == [5, 2, 2, 5]
    assert fib.details["counts"]["4"]["family"] == 21


def test_timings_are_kept_out_of_the_payload():
    rep = V.full_report(V.ReportConfig(only=("corollary", "table-mult")))
    assert "timings" not in rep.to_json()
    assert set(rep.timings) == {"table-mult@types(k=3)", "corollary@types(k=3)"}
    assert "timings" in json.loads(rep.to_json(with_timings=True))


def test_plan_order_is_fixed():
    cfg = V.ReportConfig()
    ids = [V.task_id(t) for t in V.build_plan(cfg)]
    assert ids == [V.task_id(t) for t in V.build_plan(V.ReportConfig(workers=8))]
    assert ids[:3] == ["example1", "example2", "example2-commutation"]
    assert len(ids) >= 25


def test_noncommuting_claim_documents_the_misprint():
    r = V.noncommuting_claim()
    assert r.verdict == "pass"
    assert r.details["values"] == ["1_4 3_3", "1_5 3_2"]
    assert r.details["printed_value_valid"] is False


def test_random_specs_are_seeded():
    assert V.random_specs(20, 0) == V.random_specs(20, 0)
    assert V.random_specs(20, 0) != V.random_specs(20, 1)

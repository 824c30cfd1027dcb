"""Verification-suite runner tests (cheap subsets only; the full catalog
sweep lives in the acceptance tests)."""

import json

import pytest

from submodlat import Context, find_minimal_non, run_suite, run_suites
from submodlat.catalog import builtin_catalog, catalog_spec
from submodlat.classes import in_B_in, soluble_in, ssU_in, smU_in
from submodlat.verify import ALL_SUITE_IDS, SUITES, resolve_suite_ids

SMALL = [catalog_spec(n) for n in ["Z1", "S3", "Q8", "A4", "S4", "Z12", "D12"]]


def test_suite_table_is_complete():
    assert len(SUITES) == 22
    assert ALL_SUITE_IDS == list(SUITES)
    assert ALL_SUITE_IDS[0] == "lemma-1.1"
    assert "example-2.8" in ALL_SUITE_IDS
    assert "thm-3.8" in ALL_SUITE_IDS


def test_resolve_suite_ids():
    assert resolve_suite_ids("all") == ALL_SUITE_IDS
    assert resolve_suite_ids(["lemma-1.2"]) == ["lemma-1.2"]
    assert resolve_suite_ids(["lemma-1.2", "all"]) == (
        ["lemma-1.2"] + [s for s in ALL_SUITE_IDS if s != "lemma-1.2"]
    )
    with pytest.raises(ValueError, match="unknown suite id"):
        resolve_suite_ids(["nonsense"])


def test_report_shape_and_instance_records(ctx):
    report = run_suites(["lemma-1.2"], specs=SMALL, ctx=ctx)
    assert set(report) == {"suites", "pass"}
    assert report["pass"] is True
    (suite,) = report["suites"]
    assert set(suite) == {"suite_id", "universe", "instances", "pass",
                          "elapsed_ms"}
    assert suite["suite_id"] == "lemma-1.2"
    assert suite["elapsed_ms"] == 0
    assert suite["universe"] == [s.name for s in SMALL]
    for inst in suite["instances"]:
        assert set(inst) == {"group", "pass", "witness"}
        assert inst["pass"] is True


def test_every_suite_passes_on_a_small_slice(ctx):
    report = run_suites("all", specs=SMALL, ctx=ctx)
    assert report["pass"] is True
    assert [s["suite_id"] for s in report["suites"]] == ALL_SUITE_IDS
    for suite in report["suites"]:
        assert suite["pass"] is True, suite["suite_id"]


def test_empty_spec_list_passes_vacuously():
    result = run_suite("all", specs=[])
    assert result.passed
    assert result.instances == []
    assert result.universe == []


def test_single_suite_entry_point(ctx):
    result = run_suite("lemma-1.4", specs=SMALL, ctx=ctx)
    assert result.suite_id == "lemma-1.4"
    assert result.passed
    assert result.elapsed_ms == 0
    d = result.to_dict()
    assert set(d) == {"suite_id", "universe", "instances", "pass", "elapsed_ms"}
    assert d["pass"] is True


def test_worked_example_suite(ctx):
    result = run_suite("example-2.8", ctx=ctx)
    assert result.passed
    assert result.universe == ["AGL(1,17)d16"]
    (inst,) = result.instances
    w = inst["witness"]
    assert w["A_order"] == 17
    assert w["A_submodular"] is True
    assert w["A_chain_orders"] == [17, 272]
    assert w["B_order"] == 16
    assert w["B_submodular"] is False
    assert w["B_prime_index_subnormal"] is True
    assert w["supersoluble"] is True
    assert w["strongly_supersoluble"] is False
    assert w["all_sylows_submodular"] is False
    assert w["all_sylows_prime_index_subnormal"] is True
    assert w["B_modularity_witness"]["condition"] in ("condition1", "condition2")


def test_reports_are_deterministic(ctx):
    ids = ["lemma-1.2", "lemma-1.4", "thm-2.6"]
    one = run_suites(ids, specs=SMALL, ctx=Context())
    two = run_suites(ids, specs=SMALL, ctx=Context())
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_parallel_report_equals_sequential(ctx):
    ids = ["lemma-1.2", "lemma-1.8", "thm-2.6", "lemma-3.2"]
    seq = run_suites(ids, specs=SMALL, ctx=Context())
    par = run_suites(ids, specs=SMALL, jobs=2)
    assert json.dumps(seq, sort_keys=True) == json.dumps(par, sort_keys=True)


def test_small_order_suite_skips_large_groups(ctx):
    specs = [catalog_spec("S3"), catalog_spec("AGL(1,17)d16")]
    result = run_suite("lemma-1.1", specs=specs, ctx=ctx)
    assert result.universe == ["S3"]  # the order-272 group is out of range
    result2 = run_suite("example-2.8", specs=[catalog_spec("S3")], ctx=ctx)
    assert result2.universe == []


def test_minimal_non_members(ctx):
    specs = list(builtin_catalog())
    assert find_minimal_non(specs, ssU_in, ctx=ctx) == [
        "A4", "AGL(1,5)d4", "AGL(1,13)d4", "AGL(1,17)d4"
    ]
    assert find_minimal_non(specs, soluble_in, ctx=ctx) == ["A5"]
    assert find_minimal_non([catalog_spec("Z6")], in_B_in, ctx=ctx) == []


def test_minimal_non_smU_equals_minimal_non_ssU(ctx):
    specs = list(builtin_catalog())
    assert find_minimal_non(specs, smU_in, ctx=ctx) == find_minimal_non(
        specs, ssU_in, ctx=ctx
    )

import json

import pytest

from ringlab import checks, compile_text
from ringlab.checks import CorpusError, UnknownCheckError, get_check, registry, run_check, run_suite

from conftest import results_for


def test_registry_size_and_ids():
    reg = registry()
    assert len(reg) >= 30
    ids = [c.id for c in reg]
    assert len(set(ids)) == len(ids)
    for expected in ("T-m", "T2.4", "T3.5", "L-corner", "G-delta", "G-seq", "G-2grp", "G-3grp",
                     "P3.2", "X-1.3", "L-matrix", "G-exp2", "C2.7"):
        assert expected in ids
    assert all(c.paper_ref for c in reg)


def test_registry_covers_lemma_parts():
    ids = {c.id for c in registry()}
    assert {f"L1.2.{i}" for i in range(1, 9)} <= ids


def test_run_check_examples():
    assert run_check("T-m", "z(8)").status == "pass"
    assert run_check("L-matrix", "m(2,z(2))").status == "pass"  # correctly NOT UJ#
    result = run_check("G-2grp", "group(z(2),s(3))")
    assert result.status == "pass"
    assert "contrapositive" in result.note


def test_run_check_skip_vs_pass():
    result = run_check("L-corner", "z(12)")  # not a UJ# ring
    assert result.status == "skip"
    assert "UJ#" in result.note
    result = run_check("C-Zn", "t(2,z(2))")
    assert result.status == "skip"


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        run_check("NOPE", "z(8)")


def test_doc_only_entries_always_skip():
    for check_id in ("G-torsion", "T-skew", "T-2primal", "P2.10", "X-UU-inf"):
        check = get_check(check_id)
        assert check.doc_only
        result = run_check(check_id, "z(8)")
        assert result.status == "skip"
        assert result.note == check.doc_only


def test_deep_oracle_gating():
    result = run_check("O-jac", "z(12)", deep=False)
    assert result.status == "skip" and "deep-oracle" in result.note
    assert run_check("O-jac", "z(12)", deep=True).status == "pass"
    assert run_check("O-nilstar", "z(12)", deep=True).status == "pass"
    # above the oracle order bound the deep checks skip with the reason
    assert run_check("O-nilstar", "t(3,z(2))", deep=True).status == "skip"


def test_run_suite_small_corpus():
    report = run_suite(["z(8)", "z(12)", "t(2,z(2))"])
    assert report.summary["fail"] == 0
    assert report.summary["pass"] > 0
    assert report.corpus == ["z(8)", "z(12)", "t(2,z(2))"]


def test_run_suite_filter():
    report = run_suite(["z(12)"], filter_glob="L1.2.*")
    assert [e["id"] for e in report.checks] == [f"L1.2.{i}" for i in range(1, 9)]
    # T2.4 biconditional holds on z(12): not UJ#, R/J = Z/6 not Boolean
    report = run_suite(["z(12)"], filter_glob="T2.4")
    (entry,) = report.checks
    assert entry["results"][0].status == "pass"


def test_run_suite_group_filter():
    report = run_suite(["group(z(4),c(2))"], filter_glob="G-*")
    by_id = {e["id"]: e["results"][0].status for e in report.checks}
    assert by_id["G-delta"] == "pass"
    assert by_id["G-2grp"] == "pass"
    assert by_id["G-locfin"] == "pass"
    assert by_id["G-torsion"] == "skip"


def test_run_suite_compile_error_annotated():
    with pytest.raises(CorpusError) as err:
        run_suite(["z(8)", "corner(m(2,z(2)),2)"])  # index 2 encodes E12, not idempotent
    assert "corner" in err.value.expr_text


def test_run_suite_empty_corpus_rejected():
    with pytest.raises(CorpusError):
        run_suite([])


def test_report_json_schema(suite_report):
    payload = suite_report.to_json_dict()
    assert set(payload) == {"version", "corpus", "checks", "summary"}
    assert payload["version"] == checks.REPORT_VERSION
    assert set(payload["summary"]) == {"pass", "fail", "skip"}
    assert len(payload["corpus"]) >= 25
    for entry in payload["checks"]:
        assert set(entry) <= {"id", "paper_ref", "results"}
        for result in entry["results"]:
            assert result["status"] in ("pass", "fail", "skip")
            assert result["ring"] in payload["corpus"]
            assert "millis" in result
    json.dumps(payload)  # serializable


def test_default_corpus_contents():
    corpus = checks.default_corpus()
    assert len(corpus) >= 25
    for required in ("z(32)", "group(z(2),q8)", "group(z(9),c(3))", "gf(9)", "skew(gf(4),frob,2)"):
        assert required in corpus


def test_suite_is_deterministic_modulo_timing(suite_report):
    second = run_suite()
    a = suite_report.to_json_dict(include_millis=False)
    b = second.to_json_dict(include_millis=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_failures_are_reproducible_with_witness():
    # mutate the claim target: run the matrix-exclusion check on a UJ# ring
    # by checking a deliberately wrong expectation through run_check twice
    first = run_check("C-Zn", "z(12)")
    second = run_check("C-Zn", "z(12)")
    assert first.status == second.status == "pass"
    # a real failure pathway: the informational audit stays deterministic too
    r1 = run_check("X-1.3", "m(2,z(2))")
    r2 = run_check("X-1.3", "m(2,z(2))")
    assert r1.status == r2.status == "pass"
    assert r1.note == r2.note


def test_lemma_sequ_on_ujsharp_rings(suite_report):
    for result in results_for(suite_report, "G-seq"):
        assert result.status in ("pass", "skip")
        if result.status == "skip":
            assert "UJ#" in result.note


def test_center_check_runs_on_ujsharp_rings(suite_report):
    statuses = {r.ring: r.status for r in results_for(suite_report, "P3.4")}
    assert statuses["z(8)"] == "pass"
    assert statuses["t(3,z(2))"] == "pass"
    assert statuses["z(12)"] == "skip"


def test_run_check_accepts_a_table_ring():
    ring = compile_text("z(8)")
    result = run_check("C-Zn", ring)
    assert result.status == "pass"
    assert result.ring == "z(8)"  # the compiled expression text labels the result
    anonymous = __import__("ringlab.construct", fromlist=["build_zmod"]).build_zmod(8)
    result = run_check("T-m", anonymous)
    assert result.status == "pass"
    assert "order 8" in result.ring


def test_exp2_check_skips_with_the_failing_hypothesis(suite_report):
    # the hypotheses (RG UJ# and 3 in J#(R)) exclude each other on nonzero
    # finite rings, so every corpus instance reports the gating reason
    results = results_for(suite_report, "G-exp2")
    assert all(r.status == "skip" for r in results)
    f2c4 = [r for r in results if r.ring == "group(z(2),c(4))"]
    assert "3" in f2c4[0].note or "UJ#" in f2c4[0].note


def test_suite_summary_counts_are_consistent(suite_report):
    total = sum(len(e["results"]) for e in suite_report.checks)
    s = suite_report.summary
    assert s["pass"] + s["fail"] + s["skip"] == total
    assert total == len(suite_report.checks) * len(suite_report.corpus)


def test_mixed_product_decomposes_jsharp_componentwise():
    # Z/4 x M2(F2): J# splits across the factors and the product is not UJ#
    assert run_check("L1.2.6", "prod(z(4),m(2,z(2)))").status == "pass"
    assert run_check("L-prod", "prod(z(4),m(2,z(2)))").status == "pass"


def test_fail_path_rendering_through_the_evaluator():
    from ringlab.checks import Check, CheckContext, Outcome, _evaluate
    from ringlab.subsets import compute_bundle

    ring = compile_text("z(8)")
    ctx = CheckContext(ring, compute_bundle(ring))
    broken = Check(
        id="T-TEST",
        paper_ref="synthetic always-failing statement",
        applies_text="all rings",
        applies=lambda _: None,
        body=lambda c: Outcome(False, witness=c.ring.describe(3), note="engineered"),
    )
    result = _evaluate(broken, ctx, "z(8)")
    assert result.status == "fail"
    assert result.witness == "3 (#3)"
    assert result.note == "engineered"
    assert result.millis >= 0
    again = _evaluate(broken, ctx, "z(8)")
    assert again.witness == result.witness  # fails reproduce their witness

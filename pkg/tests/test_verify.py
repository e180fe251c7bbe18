import json

import pytest

from permcodes import verify


@pytest.mark.parametrize(
    "suite,factorials",
    [
        ("lehmer", 153),      # 1! + 2! + 3! + 4! + 5!
        ("mcmahon", 153),
        ("codes", 153),
        ("s2s4", 153),
        ("lemmas", 153),
    ],
)
def test_suites_pass_and_count_permutations(suite, factorials):
    report = verify.run_suite(suite, 5)
    assert report.ok
    assert report.n == 5
    assert report.checked == factorials
    assert report.counterexample is None


def test_mahonian_counts_statistics_times_permutations():
    report = verify.run_suite("mahonian", 4)
    assert report.ok
    assert report.checked == 11 * (1 + 2 + 6 + 24)


@pytest.mark.parametrize("name", list(verify.SUITES))
def test_single_n_runs(name):
    fn, _ = verify.SUITES[name]
    report = fn(4)
    assert report.ok
    assert report.n == 4
    assert report.millis >= 0


def test_smallest_sizes_pass():
    for name in verify.SUITES:
        fn, _ = verify.SUITES[name]
        assert fn(1).ok
        assert fn(2).ok


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        verify.run_suite("nope")
    with pytest.raises(ValueError):
        verify.run_suite("lehmer", 0)


def test_report_record_is_json_serializable():
    report = verify.run_suite("lemmas", 3)
    record = report.as_record()
    assert record["suite"] == "lemmas"
    assert record["status"] == "pass"
    assert record["counterexample"] is None
    json.dumps(record)


def test_failing_report_shape():
    report = verify.VerifyReport(
        suite="demo",
        n=4,
        ok=False,
        checked=7,
        millis=1.5,
        counterexample={"permutation": "2 1 3 4", "detail": "x", "expected": "0", "actual": "1"},
    )
    assert report.status() == "FAIL"
    record = report.as_record()
    assert record["counterexample"]["permutation"] == "2 1 3 4"
    json.dumps(record)

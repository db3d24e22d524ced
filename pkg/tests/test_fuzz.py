import pytest

from opineq import EnsembleSpec, SUITE_NAMES, UnknownSuite, run_suite, run_suites


def test_unknown_suite_raises():
    spec = EnsembleSpec(kind="integer-complex", dim=2, count=1, seed=1)
    with pytest.raises(UnknownSuite):
        run_suite("nope", spec)
    with pytest.raises(UnknownSuite):
        run_suites(["half-diff", "nope"], spec)


def test_all_suites_run_clean_at_2x2():
    # every suite is theorem-backed at n = 2 (the beta-chain middle link
    # only breaks from n = 3 up; see test_inequalities)
    spec = EnsembleSpec(kind="integer-complex", dim=2, count=30, seed=1)
    for summary in run_suites(SUITE_NAMES, spec):
        assert summary.trials == 30
        assert summary.violations == 0, summary
        assert summary.reports > 0


def test_compression_counts_hypothesis_unmet():
    spec = EnsembleSpec(kind="gaussian-complex", dim=2, count=40, seed=3)
    summary = run_suite("compression", spec)
    # random Gram corners rarely satisfy the range-support hypothesis
    assert summary.hypothesis_unmet > 0
    assert summary.violations == 0


def test_fuzz_deterministic():
    spec = EnsembleSpec(kind="gaussian-complex", dim=3, count=10, seed=7)
    a = run_suite("implicit", spec)
    b = run_suite("implicit", spec)
    assert a.worst_slack == b.worst_slack
    assert a.worst_name == b.worst_name


def test_worst_slack_tracks_inputs():
    spec = EnsembleSpec(kind="integer-complex", dim=2, count=5, seed=2)
    summary = run_suite("half-diff", spec)
    assert summary.worst_inputs is not None and "T" in summary.worst_inputs
    assert summary.worst_name.startswith("half-diff")

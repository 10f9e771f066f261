"""The self-check battery: determinism, report shape, pinned discrepancies."""

import json

import pytest

from cotsum.verify import run_checks


@pytest.fixture(scope="module")
def small_report():
    return run_checks(max_b=25, max_n=60, seed=7)


def test_small_run_is_green(small_report):
    assert small_report["summary"]["ok"] is True
    assert small_report["summary"]["failed"] == 0
    assert small_report["summary"]["passed"] == small_report["summary"]["checks"]
    for check in small_report["checks"]:
        assert check["passed"], check
        assert check["cases"] > 0


def test_report_parameters_echoed(small_report):
    assert small_report["parameters"] == {"max_b": 25, "max_n": 60, "seed": 7}


def test_check_names_unique_and_grouped(small_report):
    names = [(c["module"], c["name"]) for c in small_report["checks"]]
    assert len(names) == len(set(names))
    modules = {c["module"] for c in small_report["checks"]}
    assert {"exact", "core", "numeric", "totient", "distribution"} <= modules


def test_report_is_json_ready_and_deterministic(small_report):
    blob = json.dumps(small_report, sort_keys=True)
    again = json.dumps(run_checks(max_b=25, max_n=60, seed=7), sort_keys=True)
    assert blob == again
    assert json.loads(blob) == small_report


def test_workers_do_not_change_the_report(small_report):
    parallel = run_checks(max_b=25, max_n=60, seed=7, workers=2)
    assert parallel == small_report


def test_pinned_discrepancies(small_report):
    pinned = {rec["name"]: rec for rec in small_report["expected_discrepancies"]}
    assert small_report["summary"]["expected_discrepancies_pinned"] is True
    assert set(pinned) == {
        "mobius-half-open-undercount",
        "partition-indexed-by-divisor",
        "coprime-sum-off-symmetry",
    }
    for rec in pinned.values():
        assert rec["matches_pin"] is True
        assert rec["observed"] == rec["pinned"]

    assert pinned["mobius-half-open-undercount"]["observed"] == {
        "variant": 4, "corrected": 5, "agrees_for_n_above_1": True,
    }
    assert pinned["partition-indexed-by-divisor"]["observed"] == {"variant": 3, "corrected": 2}
    assert pinned["coprime-sum-off-symmetry"]["observed"] == {"sum": 3, "paired_formula": "5"}


def test_empirical_extremes_recorded(small_report):
    emp = small_report["empirical"]["main-term-error"]
    assert set(emp) >= {"max_abs_error", "max_error_over_2omega"}
    # the factor-of-2 headroom in the bound: the normalized ratio stays < 1
    assert 0 <= emp["max_error_over_2omega"] < 1


def test_bad_parameters_rejected():
    with pytest.raises(ValueError):
        run_checks(max_b=1)
    with pytest.raises(ValueError):
        run_checks(max_n=0)
    with pytest.raises(ValueError):
        run_checks(workers=0)

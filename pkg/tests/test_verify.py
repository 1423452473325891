import json

import pytest

from liecat.errors import ConfigInvalid, UnknownSuite
from liecat.verify import SUITES, Report, SuiteConfig, reports_json, run_all, run_suite


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


@pytest.mark.parametrize("kw", [{"cases": -1}, {"max_degree": 0}, {"n_gens": 9}, {"field": "q-sqrt:9"}])
def test_bad_config(kw):
    with pytest.raises(ConfigInvalid):
        SuiteConfig(**kw)


def test_basis_dims_table():
    rep = run_suite("basis_dims", SuiteConfig())
    assert rep.verdict == "PASS"
    assert rep.details["dimensions"]["2"] == [2, 1, 2, 3, 6, 9]


def test_constants_and_fhat_pass():
    assert run_suite("constants").failed == 0
    assert run_suite("fhat", SuiteConfig(cases=20)).verdict == "PASS"


def test_vacuous_reports():
    reports = run_all(SuiteConfig(cases=0))
    assert [r.suite for r in reports] == list(SUITES)
    assert all(r.verdict == "PASS" and r.cases == 0 for r in reports)


def test_seed_changes_samples_not_verdicts():
    a = run_suite("jacobi", SuiteConfig(seed=1, cases=30))
    b = run_suite("jacobi", SuiteConfig(seed=2, cases=30))
    assert a.verdict == b.verdict == "PASS"
    assert a.to_json() != b.to_json()
    assert a.to_json() == run_suite("jacobi", SuiteConfig(seed=1, cases=30)).to_json()


def test_failure_payload_names_anchor():
    rep = Report("x", {})
    from liecat.verify import _Run

    _Run(rep).equal("demo", "c_p c_x = c_p", 1, 2, p="x")
    assert rep.verdict == "FAIL"
    assert rep.failures[0]["anchor"] == "c_p c_x = c_p"
    assert rep.failures[0]["inputs"] == {"p": "x"}


def test_errors_do_not_abort_siblings():
    reports = run_all(SuiteConfig(cases=2, max_degree=2))
    byname = {r.suite: r for r in reports}
    assert byname["jacobi"].verdict == "ERROR"
    assert byname["matrix_iso"].verdict == "PASS"


def test_summary_json():
    out = json.loads(reports_json(run_all(SuiteConfig(cases=1))))
    assert out["verdict"] == "PASS"
    assert set(out["suites"]) == set(SUITES)

"""Verification suites: structure and outcomes of the cheap suites.

The heavyweight module and GWA suites get exercised end to end by the
acceptance tests; here we pin the report structure and run the fast
ones.
"""

import pytest

from qsmash.verify import (
    CheckResult,
    SUITE_NAMES,
    all_passed,
    check_centers,
    check_growth,
    check_l_normal,
    run_suite,
)


def test_suite_names():
    assert SUITE_NAMES == (
        "identities",
        "spectrum",
        "aut",
        "gwa",
        "modules",
        "centers",
        "growth",
        "all",
    )
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("everything")


@pytest.mark.parametrize("suite", ["identities", "spectrum", "aut", "centers", "growth"])
def test_fast_suites_pass(suite):
    results = run_suite(suite)
    assert results, suite
    assert all_passed(results), [r for r in results if not r.passed]
    for row in results:
        assert isinstance(row, CheckResult)
        assert row.name and isinstance(row.passed, bool)


def test_report_details_are_informative():
    by_name = {r.name: r for r in run_suite("identities")}
    assert "defining relations" in by_name
    assert by_name["E^i*Y straightening"].detail == "exact for i = 1..8"
    heights = [r for r in run_suite("spectrum") if r.name == "heights"]
    assert len(heights) == 1 and heights[0].passed


def test_l_normal_check_scales():
    results = check_l_normal(samples=10, seed=3)
    assert all_passed(results)
    assert "10 random factored inputs" in results[-1].detail


def test_centers_and_growth_rows():
    rows = check_centers()
    assert [r.name for r in rows] == [
        "center of the full algebra in degree 4",
        "K-centralizer in degree 2",
        "center of the quotient by X",
        "center of the quotient by phi",
        "center of the K,Y Laurent quotient",
    ]
    assert all_passed(rows)
    (growth,) = check_growth()
    assert growth.passed and "fit 4.0" in growth.detail

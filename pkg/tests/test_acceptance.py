"""Acceptance battery: every criterion at its stated tolerance.

One test per criterion, all reading a single shared battery run plus the
determinism re-run; one PASS/FAIL line is printed per criterion.
"""

import pytest

from quivalg import verify
from quivalg.budgets import DEFAULT


@pytest.fixture(scope="session")
def full_report():
    report, passed = verify.run_all(DEFAULT)
    for crit in report["criteria"]:
        mark = "PASS" if crit["passed"] else "FAIL"
        print(f"[{mark}] {crit['name']}: {crit['summary']}")
    return report


def _criterion(report, index):
    crit = report["criteria"][index]
    detail = "\n".join(str(d) for d in crit["details"])
    assert crit["passed"], f"{crit['name']} failed:\n{detail}"


def test_criterion_1_exterior_type_algebra(full_report):
    _criterion(full_report, 0)


def test_criterion_2_radical_square_zero_algebra(full_report):
    _criterion(full_report, 1)


def test_criterion_3_gluing_and_opposite(full_report):
    _criterion(full_report, 2)


def test_criterion_4_one_vertex_extension(full_report):
    _criterion(full_report, 3)


def test_criterion_5_phi_identities(full_report):
    _criterion(full_report, 4)


def test_criterion_6_additivity_battery(full_report):
    _criterion(full_report, 5)


def test_criterion_7_syzygy_finite_gluing(full_report):
    _criterion(full_report, 6)


def test_criterion_8_functor_contracts(full_report):
    _criterion(full_report, 7)


def test_criterion_9_infrastructure(full_report):
    _criterion(full_report, 8)


def test_all_criteria_pass(full_report):
    assert full_report["passed"]

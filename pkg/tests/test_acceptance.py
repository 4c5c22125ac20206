"""Acceptance criteria, one test each, at their stated parameters and tolerances.

Each test prints a single [PASS]/[FAIL] line with the suite summary.
"""

import pytest

from cy2stab.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.label for c in CRITERIA])
def test_criterion(criterion, capsys):
    report = criterion.run()
    with capsys.disabled():
        print(f"\n{criterion.label}: {report.line()}")
    assert report.passed, report.to_json()

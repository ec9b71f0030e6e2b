"""Acceptance criteria, one test per criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line with the measured detail.
Set ``COXCONE_H4=1`` to add the H4 computation to criterion 7 (about ten
minutes on its own).
"""

import os

import pytest

from coxcone import selftest

H4 = os.environ.get("COXCONE_H4") == "1"


@pytest.mark.parametrize("number", range(1, len(selftest.CHECKS) + 1))
def test_criterion(number, capsys):
    kwargs = {"include_h4": H4} if number == 7 else {}
    result = selftest.run_check(number, **kwargs)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail

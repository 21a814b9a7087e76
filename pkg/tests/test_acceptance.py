"""One test per acceptance criterion, each printing its pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or use
``groupoids verify-all`` for the same sweep from the command line.
"""

import json

import pytest

from conwaygroupoids.acceptance import CRITERIA, run_all


@pytest.mark.parametrize(
    "number,title,func", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA]
)
def test_criterion(number, title, func):
    results = run_all(numbers={number})
    assert len(results) == 1
    result = results[0]
    print(result.line())
    assert result.passed, (
        f"criterion {number} failed: {title}\n"
        + json.dumps(result.details, indent=2, default=str)
    )

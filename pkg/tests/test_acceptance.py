"""The ten acceptance criteria, one test each, at seed 0 and full scale.

Each test prints its one-line verdict; the lines are repeated in the
pytest terminal summary.  Run as a script for the lines alone:

    python3 tests/test_acceptance.py
"""

import pytest

from ctdom.suites import SUITES, run_suite

ACCEPTANCE_LINES: list[str] = []

CRITERIA = sorted(SUITES, key=lambda name: SUITES[name][0])


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(name):
    result = run_suite(name, seed=0)
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, f"{line}\n{result.failures[:3]}"


if __name__ == "__main__":
    import sys

    results = [run_suite(name, seed=0) for name in CRITERIA]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)

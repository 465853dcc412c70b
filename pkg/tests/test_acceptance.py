"""The ten acceptance criteria, one test each.

Every test prints a single PASS/FAIL line; the collected lines are repeated
in the terminal summary.  Run as a script to get just the lines.
"""

import pytest

from arcext.suite import CRITERIA, load_config

CFG = load_config()


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num, acceptance_log):
    name, check = CRITERIA[num]
    ok, details = check(CFG)
    acceptance_log[num] = (name, ok)
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {name}")
    assert ok is True, details


if __name__ == "__main__":
    import sys

    failed = 0
    for num in sorted(CRITERIA):
        name, check = CRITERIA[num]
        ok = check(CFG)[0]
        failed += not ok
        print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {name}")
    sys.exit(1 if failed else 0)

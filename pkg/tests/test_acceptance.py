"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import pytest

from faulhaber import checks


@pytest.mark.parametrize("crit", checks.CRITERIA, ids=lambda c: f"criterion-{c.key}")
def test_criterion(crit, capsys):
    failures = crit.run()
    mark = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print(f"\n{mark} criterion {crit.key}: {crit.title}")
        if crit.key in checks.ERRATA:
            print(f"     note: {checks.ERRATA[crit.key]}")
        for f in failures:
            print(f"     {f}")
    assert not failures, failures

"""One test per shipped acceptance criterion, at the stated tolerances.

Each case prints a single PASS/FAIL line with the criterion's summary so a
plain pytest run doubles as the checklist; `spfkit suite --all` drives the
same implementations from the command line.
"""

import pytest

from spfkit import acceptance

SEED = 42


@pytest.mark.parametrize(
    "ident,name,fn",
    acceptance.CRITERIA,
    ids=["%02d-%s" % (c[0], c[1]) for c in acceptance.CRITERIA],
)
def test_criterion(ident, name, fn):
    res = fn(seed=SEED)
    print("criterion %2d %-22s %s  %s" % (
        ident, name, "PASS" if res.passed else "FAIL", res.detail))
    assert res.passed, "criterion %d (%s): %s" % (ident, name, res.detail)


def test_runner_subset_in_numeric_order():
    results = acceptance.run([14, 1], seed=SEED)
    assert [r.ident for r in results] == [1, 14]
    assert all(r.passed for r in results)
    with pytest.raises(ValueError):
        acceptance.run([99])

"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run under pytest (``pytest tests/test_acceptance.py -s``) or directly
(``python3 tests/test_acceptance.py``).
"""
import time

import pytest

from bdmeta.suites import CRITERIA

TITLES = {
    1: "dual-group golden table",
    2: "index table and Omega cosets",
    3: "distinguished character exponents",
    4: "obstruction matrix for PGL2, n=2",
    5: "hyperspecial splitting verdicts",
    6: "oracle equivalences",
    7: "structural invariants",
}


def run_criterion(k):
    t0 = time.perf_counter()
    rows = CRITERIA[k]()
    bad = [r for r in rows if not r["pass"]]
    dt = time.perf_counter() - t0
    line = (f"{'PASS' if rows and not bad else 'FAIL'} criterion {k} ({TITLES[k]}): "
            f"{len(rows) - len(bad)}/{len(rows)} cases, {dt:.1f}s")
    return line, rows, bad


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    line, rows, bad = run_criterion(k)
    with capsys.disabled():
        print("\n" + line)
    assert rows
    assert not bad, [(r["id"], r["detail"]) for r in bad[:5]]


if __name__ == "__main__":
    import sys
    ok = True
    for k in sorted(CRITERIA):
        line, _, bad = run_criterion(k)
        print(line)
        ok &= not bad
    sys.exit(0 if ok else 1)

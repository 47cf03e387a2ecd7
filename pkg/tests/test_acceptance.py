"""The fourteen acceptance criteria, one test each, exact equality throughout."""

from __future__ import annotations

import time

import pytest

from a1stable.verify import CRITERIA, run_criterion

SEED = 0


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    t = time.perf_counter()
    report = run_criterion(number, seed=SEED)
    elapsed = time.perf_counter() - t
    failed = [c for c in report.checks if c.status == "fail"]
    with capsys.disabled():
        status = "PASS" if report.ok else "FAIL"
        print(f"\ncriterion {number:>2} {CRITERIA[number][0]:<22} {status}  "
              f"({len(report.checks)} checks, {elapsed:.1f}s)")
        for c in failed:
            print(f"    failed {c.id}: {c.ref} {c.details}")
    assert report.checks, "criterion produced no checks"
    assert not failed, "; ".join(f"{c.id}: {c.details}" for c in failed)

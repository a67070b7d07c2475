"""Acceptance suite: one test per verified claim, each printing a pass/fail
line.  All checks are exact; the time bounds are generous sanity caps."""

import time

import pytest

from doorlab.verify import VERIFIERS

TIME_CAPS = {
    "thm1-classification": 31.0,
    "lemmas-1-2": 31.0,
    "occ-converse": 31.0,
    "thm2": 5.0,
    "thm4": 60.0,
    "thm3": 120.0,
    "part2-constructions": 60.0,
    "relative-s1-s3": 30.0,
    "remarks": 30.0,
    "infrastructure": 60.0,
}


@pytest.mark.parametrize("criterion", list(VERIFIERS))
def test_acceptance(criterion, capsys):
    start = time.monotonic()
    report = VERIFIERS[criterion]()
    elapsed = time.monotonic() - start
    status = "PASS" if report["ok"] else "FAIL"
    with capsys.disabled():
        print(f"[{status}] {criterion} ({elapsed:.2f}s)")
    assert report["ok"], report
    assert elapsed < TIME_CAPS[criterion], f"{criterion} too slow: {elapsed:.1f}s"

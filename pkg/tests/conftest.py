from __future__ import annotations

from itertools import combinations

import pytest

from shiftlab.complex import SimplicialComplex

ACCEPTANCE: dict = {}


def find_minor_complex() -> SimplicialComplex:
    """All triples of [7] except 127, 137, 237, plus the six triples through 8."""
    drop = {(1, 2, 7), (1, 3, 7), (2, 3, 7)}
    triples = [t for t in combinations(range(1, 8), 3) if t not in drop]
    extra = [(1, 2, 8), (1, 3, 8), (2, 3, 8), (1, 7, 8), (2, 7, 8), (3, 7, 8)]
    return SimplicialComplex(8, triples + extra)


@pytest.fixture
def minor_example() -> SimplicialComplex:
    return find_minor_complex()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, seconds, limit, note = ACCEPTANCE[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {seconds:7.2f}s (limit {limit}s)  {note}")

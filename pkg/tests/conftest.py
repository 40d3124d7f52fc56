from __future__ import annotations

import pytest

from thetacalc.verlinde import VerlindeQuery, verlinde_number

GRID_SUM_MAX = 10
GRID_GENERA = tuple(range(2, 6))


@pytest.fixture(scope="session")
def verlinde_grid() -> dict[tuple[int, int, int], int]:
    """All v_{r,k} with r+k <= 10 and 2 <= g <= 5, computed once per session."""
    values = {}
    for n in range(2, GRID_SUM_MAX + 1):
        for r in range(1, n):
            for g in GRID_GENERA:
                values[(r, n - r, g)] = verlinde_number(VerlindeQuery(r, n - r, g))
    return values

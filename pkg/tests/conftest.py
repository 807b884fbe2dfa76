import numpy as np
import pytest
from hypothesis import strategies as st

from jps4grid import GridMap

_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion."""
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def random_grid(rng, width, height, density):
    return GridMap(rng.random((height, width)) >= density)


def random_problem(rng, width=20, height=20, max_density=0.4):
    """Random grid plus two passable cells (possibly equal), or None if all blocked."""
    grid = random_grid(rng, width, height, rng.uniform(0.0, max_density))
    free = grid.free_cells()
    if not free:
        return None
    return grid, free[rng.integers(len(free))], free[rng.integers(len(free))]


@st.composite
def grids(draw, max_side=8, min_side=1):
    w = draw(st.integers(min_side, max_side))
    h = draw(st.integers(min_side, max_side))
    flat = draw(st.lists(st.booleans(), min_size=w * h, max_size=w * h))
    return GridMap(np.array(flat, dtype=bool).reshape(h, w))


@st.composite
def grids_with_free_pair(draw, max_side=10):
    grid = draw(grids(max_side=max_side))
    free = grid.free_cells()
    if not free:
        grid = GridMap(np.ones((grid.height, grid.width), dtype=bool))
        free = grid.free_cells()
    a = draw(st.sampled_from(free))
    b = draw(st.sampled_from(free))
    return grid, a, b

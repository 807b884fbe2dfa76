import os
import subprocess
import sys
import textwrap

import numpy as np
import pytest
from hypothesis import given, settings

from jps4grid import (
    DIRECTIONS,
    GridError,
    GridMap,
    Path,
    SearchInputError,
    SearchProblem,
    astar,
    bfs_oracle,
    generate_empty,
    generate_rooms,
    jps4,
    reconstruct_path,
    solve,
)
from jps4grid.canonical import incoming_direction
from jps4grid.pruning import is_jump_point

from .conftest import grids_with_free_pair, random_problem
from .oracles import bfs_distance

ENGINES = [astar, jps4, bfs_oracle]


def check_path(grid, problem, result):
    p = result.path
    assert p.start == problem.start and p.end == problem.goal
    assert p.is_valid_on(grid)


@pytest.mark.parametrize("engine", ENGINES)
def test_start_is_goal(engine):
    g = generate_empty(5, 5)
    r = engine(SearchProblem(g, (2, 2), (2, 2)))
    assert r.length == 0 and r.path.nodes == ((2, 2),)
    assert r.metrics.expanded == 1


@pytest.mark.parametrize("engine", ENGINES)
def test_empty_corner_to_corner(engine):
    g = generate_empty(5, 5)
    problem = SearchProblem(g, (0, 4), (4, 0))
    r = engine(problem)
    assert r.length == 8
    check_path(g, problem, r)


@pytest.mark.parametrize("engine", ENGINES)
def test_walled_off(engine):
    g = GridMap.from_rows(["..@..", "..@..", "@@@..", "....."])
    g = g.with_blocked((0, 3), (1, 3), (2, 3))
    r = engine(SearchProblem(g, (0, 0), (4, 3)))
    assert r.path is None and r.length is None and not r.found


@pytest.mark.parametrize("engine", ENGINES)
def test_bad_endpoints(engine):
    g = generate_empty(3, 3).with_blocked((1, 1))
    with pytest.raises(SearchInputError):
        engine(SearchProblem(g, (1, 1), (0, 0)))
    with pytest.raises(SearchInputError):
        SearchProblem(g, (0, 0), (3, 0))


def test_around_obstacle():
    g = generate_empty(5, 5).with_blocked((2, 3))
    problem = SearchProblem(g, (0, 4), (2, 1))
    want = bfs_distance(g, problem.start, problem.goal)
    assert want == 5
    r = jps4(problem)
    assert r.length == want == astar(problem).length
    check_path(g, problem, r)


def test_jps4_uses_forced_corner():
    # goal straight above the obstacle: the only way round uses the corner jump point
    g = generate_empty(5, 5).with_blocked((2, 3))
    r = jps4(SearchProblem(g, (3, 4), (2, 1)))
    assert r.length == 4
    assert (3, 2) in r.expanded_nodes


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        solve(generate_empty(2, 2), (0, 0), (1, 1), "dijkstra")


def test_reconstruct_path():
    assert reconstruct_path([(0, 0), (3, 0)]).nodes == ((0, 0), (1, 0), (2, 0), (3, 0))
    assert reconstruct_path([(0, 0)]).length == 0
    p = reconstruct_path([(0, 0), (0, 2), (2, 2)])
    assert p.length == 4 and p.nodes[2] == (0, 2)
    with pytest.raises(GridError):
        reconstruct_path([(0, 0), (1, 1)])
    with pytest.raises(GridError):
        reconstruct_path([])


def test_random_three_way_agreement():
    rng = np.random.default_rng(2024)
    for _ in range(300):
        case = random_problem(rng, 12, 9, 0.45)
        if case is None:
            continue
        grid, a, b = case
        problem = SearchProblem(grid, a, b)
        results = [e(problem) for e in ENGINES]
        assert len({r.length for r in results}) == 1
        for r in results:
            if r.found:
                check_path(grid, problem, r)


@settings(max_examples=300, deadline=None)
@given(grids_with_free_pair(max_side=9))
def test_optimality_property(case):
    grid, a, b = case
    problem = SearchProblem(grid, a, b)
    want = bfs_distance(grid, a, b)
    for engine in (astar, jps4):
        assert engine(problem).length == want


def test_metrics_sanity():
    rng = np.random.default_rng(5)
    for _ in range(100):
        case = random_problem(rng, 15, 15, 0.35)
        if case is None:
            continue
        problem = SearchProblem(*case)
        for engine in (astar, jps4):
            m = engine(problem).metrics
            assert m.open_pops <= m.open_pushes
            assert m.expanded <= m.open_pops
            assert m.max_open >= 1
            assert m.visited <= problem.grid.width * problem.grid.height
            assert m.wall_time > 0


def test_heuristic_monotone_along_path():
    rng = np.random.default_rng(9)
    for _ in range(100):
        case = random_problem(rng, 15, 15, 0.3)
        if case is None:
            continue
        grid, a, b = case
        r = astar(SearchProblem(grid, a, b))
        if not r.found:
            continue
        fs = [i + abs(c.x - b.x) + abs(c.y - b.y) for i, c in enumerate(r.path.nodes)]
        assert all(f1 <= f2 for f1, f2 in zip(fs, fs[1:]))


def test_expanded_nodes_are_jump_points():
    rng = np.random.default_rng(17)
    for _ in range(150):
        case = random_problem(rng, 14, 14, 0.35)
        if case is None:
            continue
        grid, a, b = case
        r = jps4(SearchProblem(grid, a, b))
        if not r.found:
            continue
        # path waypoints where the search placed a node are start, goal or jump points
        waypoints = set(r.expanded_nodes) & set(r.path.nodes)
        index = {c: i for i, c in enumerate(r.path.nodes)}
        for c in waypoints:
            i = index[c]
            if i == 0:
                continue
            assert is_jump_point(grid, c, incoming_direction(r.path, i), b)


def test_all_expanded_are_jump_points_from_their_parent():
    rng = np.random.default_rng(3)
    for _ in range(100):
        case = random_problem(rng, 12, 12, 0.3)
        if case is None:
            continue
        grid, a, b = case
        r = jps4(SearchProblem(grid, a, b))
        for c in r.expanded_nodes[1:]:
            # some straight ray from a neighbour cell must justify c
            assert any(
                grid.passable(c.step(d, -1)) and is_jump_point(grid, c, d, b)
                for d in DIRECTIONS
            )


def test_empty_map_jps_counts():
    g = generate_empty(60, 60)
    r = jps4(SearchProblem(g, (0, 0), (59, 59)))
    assert r.length == 118
    assert r.metrics.max_open == 1
    # start, 59 horizontal steps and the goal: pushed once, popped once
    assert r.metrics.open_pushes == r.metrics.open_pops == 61
    assert r.metrics.visited == 3600


def test_jps_visits_grow_with_area():
    visited, max_open = [], []
    for side in (20, 40, 80):
        m = jps4(SearchProblem(generate_empty(side, side), (0, 0), (side - 1, side - 1))).metrics
        visited.append(m.visited)
        max_open.append(m.max_open)
    assert visited == [400, 1600, 6400]
    assert max(max_open) <= 2


def test_jps_expands_less_on_rooms():
    # holds for most but not all long queries; a few percent go the other way
    g = generate_rooms(120, 120, 8, 1)
    free = g.free_cells()
    rng = np.random.default_rng(0)
    checked = fewer = 0
    while checked < 60:
        a, b = free[rng.integers(len(free))], free[rng.integers(len(free))]
        p = SearchProblem(g, a, b)
        ra = astar(p)
        if ra.length < 100:
            continue
        rj = jps4(p)
        assert ra.length == rj.length
        fewer += rj.metrics.expanded <= ra.metrics.expanded
        checked += 1
    assert fewer >= 0.9 * checked


def test_counters_repeatable():
    g = generate_rooms(60, 60, 8, 2)
    p = SearchProblem(g, (1, 1), (52, 52))
    for engine in (astar, jps4):
        first = engine(p).metrics.counters()
        assert all(engine(p).metrics.counters() == first for _ in range(3))


def test_python_fallback_matches(tmp_path):
    """The uncompiled kernels give identical paths and counters."""
    script = textwrap.dedent("""
        import json, numpy as np
        from jps4grid import SearchProblem, astar, jps4, backend_name
        from jps4grid.grid import GridMap
        rng = np.random.default_rng(11)
        out = {"backend": backend_name(), "runs": []}
        for _ in range(40):
            grid = GridMap(rng.random((10, 13)) >= rng.uniform(0, 0.4))
            free = grid.free_cells()
            if not free:
                continue
            a, b = free[rng.integers(len(free))], free[rng.integers(len(free))]
            for f in (astar, jps4):
                r = f(SearchProblem(grid, a, b))
                out["runs"].append([None if r.path is None else [list(c) for c in r.path],
                                    list(r.metrics.counters())])
        print(json.dumps(out))
    """)
    import json

    def run(disable):
        env = dict(os.environ, JPS4GRID_DISABLE_NUMBA="1" if disable else "0")
        proc = subprocess.run([sys.executable, "-c", script], env=env,
                              capture_output=True, text=True, check=True)
        return json.loads(proc.stdout)

    slow, fast = run(True), run(False)
    assert slow["backend"] == "python"
    assert fast["backend"] == "numba"
    assert slow["runs"] == fast["runs"]

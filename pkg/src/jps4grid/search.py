"""Search drivers: A*, JPS4 and a breadth-first oracle.

All three take a :class:`SearchProblem` and return a :class:`SearchResult`
carrying the unit-step path (or ``None`` when the goal is unreachable) and
the same set of counters, so their outputs are directly comparable.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from collections.abc import Sequence as _SequenceABC
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .grid import DIRECTIONS, Coord, GridError, GridMap, Path


class SearchInputError(GridError):
    """Start or goal outside the map or on a blocked cell."""


@dataclass(frozen=True)
class SearchProblem:
    grid: GridMap
    start: Coord
    goal: Coord

    def __post_init__(self):
        object.__setattr__(self, "start", Coord(*self.start))
        object.__setattr__(self, "goal", Coord(*self.goal))
        for name in ("start", "goal"):
            c = getattr(self, name)
            if not self.grid.passable(c):
                raise SearchInputError(f"{name} {tuple(c)} is blocked or outside the map")


@dataclass(frozen=True)
class SearchMetrics:
    expanded: int = 0
    open_pushes: int = 0
    open_pops: int = 0
    max_open: int = 0
    visited: int = 0
    wall_time: int = 0  # nanoseconds

    @property
    def open_ops(self) -> int:
        return self.open_pushes + self.open_pops

    def counters(self) -> tuple[int, int, int, int, int]:
        """Everything except wall time; identical across repeated runs."""
        return (self.expanded, self.open_pushes, self.open_pops, self.max_open, self.visited)


class PaddedCells(_SequenceABC):
    """Read-only view of padded flat indices as map coordinates, decoded on access."""

    __slots__ = ("_idx", "_stride")

    def __init__(self, idx: np.ndarray, stride: int):
        self._idx = idx
        self._stride = stride

    def __len__(self):
        return len(self._idx)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PaddedCells(self._idx[i], self._stride)
        y, x = divmod(int(self._idx[i]), self._stride)
        return Coord(x - 1, y - 1)

    def __eq__(self, other):
        if isinstance(other, _SequenceABC):
            return len(self) == len(other) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self):
        return f"PaddedCells({list(self)!r})"


@dataclass(frozen=True)
class SearchResult:
    path: Optional[Path]
    metrics: SearchMetrics
    expanded_nodes: Sequence[Coord] = ()

    @property
    def found(self) -> bool:
        return self.path is not None

    @property
    def length(self) -> Optional[int]:
        return None if self.path is None else self.path.length


# neighbour order used by both kernels: RIGHT, DOWN, LEFT, UP
KERNEL_ORDER = np.array([3, 1, 2, 0], dtype=np.int64)


def reconstruct_path(waypoints: Sequence[Sequence[int]]) -> Path:
    """Expand co-linear waypoints into unit steps."""
    if len(waypoints) == 0:
        raise GridError("no waypoints")
    nodes = [Coord(*waypoints[0])]
    for a, b in zip(waypoints, waypoints[1:]):
        dx, dy = b[0] - a[0], b[1] - a[1]
        if (dx == 0) == (dy == 0):
            raise GridError(f"waypoints {tuple(a)} and {tuple(b)} are not co-linear")
        sx = (dx > 0) - (dx < 0)
        sy = (dy > 0) - (dy < 0)
        for k in range(1, abs(dx) + abs(dy) + 1):
            nodes.append(Coord(a[0] + k * sx, a[1] + k * sy))
    return Path(nodes)


def _run(algorithm: str, problem: SearchProblem) -> SearchResult:
    grid = problem.grid.padded()
    stride = problem.grid.width + 2
    (sx, sy), (gx, gy) = problem.start, problem.goal
    start = (sy + 1) * stride + sx + 1
    goal = (gy + 1) * stride + gx + 1
    ws = _kernels.workspace(grid.size)
    run = ws.next_run()
    t0 = time.perf_counter_ns()
    if algorithm == "jps4":
        found, waypoints, counters, expanded = _kernels.jps4_kernel(
            grid, stride, start, goal, KERNEL_ORDER, run,
            ws.g, ws.parent, ws.arrival, ws.g_at, ws.closed_at, ws.seen_at,
            ws.expanded, ws.heap,
        )
    else:
        found, waypoints, counters, expanded = _kernels.astar_kernel(
            grid, stride, start, goal, KERNEL_ORDER, run,
            ws.g, ws.parent, ws.g_at, ws.closed_at, ws.seen_at, ws.expanded, ws.heap,
        )
    elapsed = time.perf_counter_ns() - t0

    def coord(i):
        y, x = divmod(int(i), stride)
        return Coord(x - 1, y - 1)

    path = reconstruct_path([coord(i) for i in waypoints]) if found else None
    metrics = SearchMetrics(*(int(c) for c in counters), wall_time=elapsed)
    return SearchResult(path, metrics, PaddedCells(expanded, stride))


def astar(problem: SearchProblem) -> SearchResult:
    """A* with the Manhattan heuristic over unit moves."""
    return _run("astar", problem)


def jps4(problem: SearchProblem) -> SearchResult:
    """Best-first search over jump points with horizontal-first pruning."""
    return _run("jps4", problem)


def bfs_oracle(problem: SearchProblem) -> SearchResult:
    """Plain breadth-first search; exact lengths, for cross-checking only."""
    grid = problem.grid
    start, goal = problem.start, problem.goal
    t0 = time.perf_counter_ns()
    parent = {start: None}
    queue = deque([start])
    pushes, pops, max_open = 1, 0, 1
    order = []
    found = False
    while queue:
        cur = queue.popleft()
        pops += 1
        order.append(cur)
        if cur == goal:
            found = True
            break
        for d in DIRECTIONS:
            nxt = cur.step(d)
            if nxt not in parent and grid.passable(nxt):
                parent[nxt] = cur
                queue.append(nxt)
                pushes += 1
        max_open = max(max_open, len(queue))
    path = None
    if found:
        nodes = []
        cur = goal
        while cur is not None:
            nodes.append(cur)
            cur = parent[cur]
        path = Path(reversed(nodes))
    elapsed = time.perf_counter_ns() - t0
    metrics = SearchMetrics(len(order), pushes, pops, max_open, len(parent), elapsed)
    return SearchResult(path, metrics, tuple(order))


ALGORITHMS = {"astar": astar, "jps4": jps4, "bfs": bfs_oracle}


def solve(grid: GridMap, start, goal, algorithm: str = "jps4") -> SearchResult:
    try:
        fn = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return fn(SearchProblem(grid, start, goal))

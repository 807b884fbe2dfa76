"""Grid model: coordinates, the four cardinal directions, maps and paths.

Coordinates are ``(x, y)`` with x growing to the right and y growing
downwards, so row 0 of a map file is ``y == 0``.
"""

from __future__ import annotations

import enum
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class GridError(ValueError):
    """Raised for malformed grids, coordinates or paths."""


class Coord(NamedTuple):
    x: int
    y: int

    def step(self, d: "Direction", k: int = 1) -> "Coord":
        return Coord(self.x + k * d.dx, self.y + k * d.dy)


class Direction(enum.Enum):
    # value is the kernel direction code
    UP = 0
    DOWN = 1
    LEFT = 2
    RIGHT = 3

    @property
    def dx(self) -> int:
        return _DELTAS[self.value][0]

    @property
    def dy(self) -> int:
        return _DELTAS[self.value][1]

    @property
    def is_horizontal(self) -> bool:
        return self in HORIZONTAL

    @property
    def is_vertical(self) -> bool:
        return self in VERTICAL

    def opposite(self) -> "Direction":
        return _OPPOSITE[self]


_DELTAS = ((0, -1), (0, 1), (-1, 0), (1, 0))
_OPPOSITE = {
    Direction.UP: Direction.DOWN,
    Direction.DOWN: Direction.UP,
    Direction.LEFT: Direction.RIGHT,
    Direction.RIGHT: Direction.LEFT,
}

HORIZONTAL = frozenset({Direction.LEFT, Direction.RIGHT})
VERTICAL = frozenset({Direction.UP, Direction.DOWN})
DIRECTIONS = (Direction.UP, Direction.DOWN, Direction.LEFT, Direction.RIGHT)


def opposite(d: Direction) -> Direction:
    return _OPPOSITE[d]


def direction(src: Sequence[int], dst: Sequence[int]) -> Direction:
    """Direction of the unit move ``src -> dst``.

    Raises GridError unless the two cells are 4-adjacent.
    """
    dx = dst[0] - src[0]
    dy = dst[1] - src[1]
    for d in DIRECTIONS:
        if d.dx == dx and d.dy == dy:
            return d
    raise GridError(f"{tuple(src)} -> {tuple(dst)} is not a unit cardinal move")


class GridMap:
    """Immutable occupancy grid; ``True`` cells are passable.

    The backing array has shape ``(height, width)`` and is indexed
    ``[y, x]``. It is marked read-only so a map can be shared between
    concurrent searches.
    """

    __slots__ = ("_cells", "_padded")

    def __init__(self, cells):
        arr = np.array(cells, dtype=np.bool_, copy=True)
        if arr.ndim != 2:
            raise GridError(f"cells must be 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise GridError("map must have at least one row and one column")
        arr.setflags(write=False)
        self._cells = arr
        self._padded = None

    @classmethod
    def from_rows(cls, rows: Iterable[str], passable: str = ".") -> "GridMap":
        """Build from strings, one per row; characters in *passable* are free."""
        rows = list(rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise GridError("rows must be non-empty and of equal length")
        return cls([[ch in passable for ch in r] for r in rows])

    @property
    def width(self) -> int:
        return self._cells.shape[1]

    @property
    def height(self) -> int:
        return self._cells.shape[0]

    @property
    def cells(self) -> np.ndarray:
        """Read-only ``(height, width)`` boolean view."""
        return self._cells

    def padded(self) -> np.ndarray:
        """Flat uint8 copy with a blocked one-cell border, built once."""
        if self._padded is None:
            from ._kernels import pad

            arr = pad(self._cells)
            arr.setflags(write=False)
            self._padded = arr
        return self._padded

    def in_bounds(self, c: Sequence[int]) -> bool:
        return 0 <= c[0] < self.width and 0 <= c[1] < self.height

    def passable(self, c: Sequence[int]) -> bool:
        """Traversability; out-of-bounds cells report blocked."""
        x, y = c[0], c[1]
        return 0 <= x < self.width and 0 <= y < self.height and bool(self._cells[y, x])

    def with_blocked(self, *coords: Sequence[int]) -> "GridMap":
        arr = self._cells.copy()
        for x, y in coords:
            arr[y, x] = False
        return GridMap(arr)

    def free_cells(self) -> list[Coord]:
        ys, xs = np.nonzero(self._cells)
        return [Coord(int(x), int(y)) for x, y in zip(xs, ys)]

    def to_rows(self, free: str = ".", blocked: str = "@") -> list[str]:
        return ["".join(free if v else blocked for v in row) for row in self._cells]

    def __eq__(self, other):
        if not isinstance(other, GridMap):
            return NotImplemented
        return np.array_equal(self._cells, other._cells)

    def __hash__(self):
        return hash((self._cells.shape, self._cells.tobytes()))

    def __repr__(self):
        return f"GridMap(width={self.width}, height={self.height}, free={int(self._cells.sum())})"


def neighbors(grid: GridMap, x: Sequence[int]) -> set[Coord]:
    """All passable 4-neighbours of the passable cell *x*."""
    if not grid.passable(x):
        raise GridError(f"{tuple(x)} is blocked or outside the map")
    c = Coord(x[0], x[1])
    return {n for n in (c.step(d) for d in DIRECTIONS) if grid.passable(n)}


class Path:
    """A cycle-free sequence of 4-adjacent cells; ``length`` counts unit moves."""

    __slots__ = ("nodes",)

    def __init__(self, nodes: Iterable[Sequence[int]]):
        self.nodes = tuple(Coord(int(n[0]), int(n[1])) for n in nodes)
        if not self.nodes:
            raise GridError("a path needs at least one node")
        for a, b in zip(self.nodes, self.nodes[1:]):
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                direction(a, b)  # raises with a descriptive message
        if len(set(self.nodes)) != len(self.nodes):
            raise GridError("path revisits a node")

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def start(self) -> Coord:
        return self.nodes[0]

    @property
    def end(self) -> Coord:
        return self.nodes[-1]

    def moves(self) -> list[Direction]:
        return [direction(a, b) for a, b in zip(self.nodes, self.nodes[1:])]

    def is_valid_on(self, grid: GridMap) -> bool:
        return all(grid.passable(n) for n in self.nodes)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    def __eq__(self, other):
        if isinstance(other, Path):
            return self.nodes == other.nodes
        return NotImplemented

    def __hash__(self):
        return hash(self.nodes)

    def __repr__(self):
        return f"Path({list(self.nodes)!r})"

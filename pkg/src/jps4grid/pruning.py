"""Neighbour pruning and jumping for 4-connected jump point search.

The canonical ordering is horizontal-first: a search that arrives at a
cell horizontally may go anywhere except back, while a vertical arrival
only continues straight on, plus any *forced* side neighbours created by
an obstacle beside the cell it came from.

These functions are the readable reference form of the successor
function. The search kernels in ``_kernels`` inline the same rules over
raw arrays; the test suite checks the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .grid import (
    HORIZONTAL,
    Coord,
    Direction,
    GridError,
    GridMap,
    direction,
    neighbors,
)


@dataclass(frozen=True)
class MoveContext:
    """Where the search stands: the node and the last unit step into it.

    ``parent`` is the *effective* parent, i.e. the cell one step behind
    ``node`` along the arrival direction, even when the search actually
    jumped in from further away.
    """

    node: Coord
    parent: Optional[Coord] = None
    arrival: Optional[Direction] = None

    def __post_init__(self):
        object.__setattr__(self, "node", Coord(*self.node))
        if self.parent is None:
            if self.arrival is not None:
                raise GridError("arrival given without a parent")
            return
        object.__setattr__(self, "parent", Coord(*self.parent))
        d = direction(self.parent, self.node)
        if self.arrival is None:
            object.__setattr__(self, "arrival", d)
        elif self.arrival is not d:
            raise GridError(f"arrival {self.arrival} disagrees with parent step {d}")

    @classmethod
    def start(cls, node: Sequence[int]) -> "MoveContext":
        return cls(Coord(*node))

    @classmethod
    def arrived(cls, node: Sequence[int], d: Direction) -> "MoveContext":
        """Context for a node reached by moving in direction *d*."""
        node = Coord(*node)
        return cls(node, node.step(d, -1), d)

    @classmethod
    def from_origin(cls, origin: Sequence[int], node: Sequence[int]) -> "MoveContext":
        """Context for *node* reached by a straight jump from *origin*."""
        dx, dy = node[0] - origin[0], node[1] - origin[1]
        if (dx == 0) == (dy == 0):
            raise GridError(f"{tuple(origin)} and {tuple(node)} are not co-linear")
        sx = (dx > 0) - (dx < 0)
        sy = (dy > 0) - (dy < 0)
        return cls.arrived(node, direction((0, 0), (sx, sy)))


_SIDES = (Direction.LEFT, Direction.RIGHT)


def natural_neighbors(grid: GridMap, ctx: MoveContext) -> set[Coord]:
    if ctx.parent is None:
        return neighbors(grid, ctx.node)
    if ctx.arrival in HORIZONTAL:
        return neighbors(grid, ctx.node) - {ctx.parent}
    ahead = ctx.node.step(ctx.arrival)
    return {ahead} if grid.passable(ahead) else set()


def forced_neighbors(grid: GridMap, ctx: MoveContext) -> set[Coord]:
    """Side neighbours that only the current node reaches in two steps.

    For a vertical arrival from ``p`` the side cell ``x+s`` is forced
    exactly when ``p+s`` is blocked; otherwise ``p -> p+s -> x+s`` is an
    equally short detour around ``x``.
    """
    if ctx.parent is None:
        raise GridError("forced neighbours need a parent")
    if ctx.arrival in HORIZONTAL:
        return set()
    forced = set()
    for s in _SIDES:
        n = ctx.node.step(s)
        if grid.passable(n) and not grid.passable(ctx.parent.step(s)):
            forced.add(n)
    return forced


def prune(grid: GridMap, ctx: MoveContext) -> set[Coord]:
    if ctx.parent is None:
        return neighbors(grid, ctx.node)
    return natural_neighbors(grid, ctx) | forced_neighbors(grid, ctx)


def jump(
    grid: GridMap, origin: Sequence[int], d: Direction, goal: Sequence[int]
) -> Optional[Coord]:
    """Nearest jump point from *origin* along *d*, or None at a wall."""
    goal = Coord(*goal)
    prev = Coord(*origin)
    while True:
        cur = prev.step(d)
        if not grid.passable(cur):
            return None
        if d in HORIZONTAL:
            return cur
        if forced_neighbors(grid, MoveContext(cur, prev, d)):
            return cur
        if cur == goal:
            return cur
        prev = cur


def identify_successors(
    grid: GridMap, ctx: MoveContext, goal: Sequence[int]
) -> set[Coord]:
    out = set()
    for n in prune(grid, ctx):
        y = jump(grid, ctx.node, direction(ctx.node, n), goal)
        if y is not None:
            out.add(y)
    return out


def is_jump_point(grid: GridMap, node: Sequence[int], d: Direction, goal: Sequence[int]) -> bool:
    """Whether *node*, entered by moving along *d*, meets a jump point condition."""
    node = Coord(*node)
    if node == Coord(*goal) or d in HORIZONTAL:
        return True
    return bool(forced_neighbors(grid, MoveContext.arrived(node, d)))


__all__ = [
    "MoveContext",
    "forced_neighbors",
    "identify_successors",
    "is_jump_point",
    "jump",
    "natural_neighbors",
    "prune",
]

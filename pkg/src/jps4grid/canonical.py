"""Horizontal-first path rewriting and turning-point analysis.

Used by the tests as an executable witness for optimality: any shortest
path can be rewritten into a horizontal-first one of equal length, and
every turning point of such a path is a jump point.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .grid import HORIZONTAL, VERTICAL, Coord, Direction, GridMap, Path, direction
from .pruning import MoveContext, forced_neighbors


class TurnKind(enum.Enum):
    HORIZONTAL_TO_VERTICAL = "HV"
    VERTICAL_TO_HORIZONTAL = "VH"


class TurningPoint(NamedTuple):
    index: int
    kind: TurnKind


def turning_points(path: Path) -> list[TurningPoint]:
    out = []
    moves = path.moves()
    for i in range(1, len(moves)):
        a, b = moves[i - 1], moves[i]
        if a is b:
            continue
        kind = TurnKind.HORIZONTAL_TO_VERTICAL if a in HORIZONTAL else TurnKind.VERTICAL_TO_HORIZONTAL
        out.append(TurningPoint(i, kind))
    return out


def _swap_target(grid: GridMap, nodes, k: int, members) -> Coord | None:
    """Replacement for the vertical-then-horizontal corner ``nodes[k]``, if allowed."""
    prev, cur, nxt = nodes[k - 1], nodes[k], nodes[k + 1]
    first = direction(prev, cur)
    second = direction(cur, nxt)
    if first not in VERTICAL or second not in HORIZONTAL:
        return None
    alt = prev.step(second)
    if not grid.passable(alt) or alt in members:
        return None
    return alt


def is_horizontal_first(grid: GridMap, path: Path) -> bool:
    """True when no vertical-to-horizontal corner can be flipped.

    A corner ``n[k-1] -v-> n[k] -h-> n[k+1]`` is flippable when the cell
    ``n[k-1] + h`` is passable (and not already on the path).
    """
    members = set(path.nodes)
    return all(
        _swap_target(grid, path.nodes, k, members) is None
        for k in range(1, len(path.nodes) - 1)
    )


def to_horizontal_first(grid: GridMap, path: Path) -> Path:
    """Flip vertical-then-horizontal corners until none can be flipped.

    Scans left to right and restarts after every flip. Each flip moves one
    horizontal step one place earlier in the move sequence, so the loop
    terminates.
    """
    nodes = list(path.nodes)
    members = set(nodes)
    k = 1
    while k < len(nodes) - 1:
        alt = _swap_target(grid, nodes, k, members)
        if alt is None:
            k += 1
            continue
        members.discard(nodes[k])
        members.add(alt)
        nodes[k] = alt
        k = 1
    return Path(nodes)


def incoming_direction(path: Path, index: int) -> Direction:
    return direction(path.nodes[index - 1], path.nodes[index])


def is_jump_point_witness(grid: GridMap, path: Path, tp: TurningPoint) -> bool:
    """Whether the turning point meets a jump point condition.

    Horizontal arrivals always qualify. A vertical arrival qualifies when
    the node has a forced neighbour given the step it was entered by.
    """
    d = incoming_direction(path, tp.index)
    if d in HORIZONTAL:
        return True
    ctx = MoveContext(path.nodes[tp.index], path.nodes[tp.index - 1], d)
    return bool(forced_neighbors(grid, ctx))

"""Synthetic maps for the empty-map and rooms benchmarks."""

from __future__ import annotations

import numpy as np

from .grid import GridError, GridMap

#: room interiors used by the rooms benchmark
ROOM_SIZES = (8, 16, 32, 64)


def generate_empty(width: int, height: int) -> GridMap:
    if width < 1 or height < 1:
        raise GridError(f"dimensions must be positive, got {width}x{height}")
    return GridMap(np.ones((height, width), dtype=np.bool_))


def generate_rooms(width: int, height: int, room_size: int, seed: int) -> GridMap:
    """Lattice of square rooms with one door in every shared wall.

    Rooms have ``room_size`` free cells per side and are separated by
    one-cell walls, so the lattice pitch is ``room_size + 1``. Columns and
    rows left over at the far edges are filled with wall. The door position
    along each wall is drawn uniformly from a generator seeded with *seed*.
    """
    if room_size < 1:
        raise GridError(f"room_size must be positive, got {room_size}")
    pitch = room_size + 1
    nx = (width - 1) // pitch
    ny = (height - 1) // pitch
    if nx < 1 or ny < 1:
        raise GridError(
            f"room_size {room_size} does not fit in a {width}x{height} grid"
        )
    rng = np.random.default_rng(seed)
    cells = np.zeros((height, width), dtype=np.bool_)
    for j in range(ny):
        for i in range(nx):
            x0, y0 = i * pitch + 1, j * pitch + 1
            cells[y0:y0 + room_size, x0:x0 + room_size] = True
    # vertical walls between horizontal neighbours
    for j in range(ny):
        for i in range(nx - 1):
            x = (i + 1) * pitch
            cells[j * pitch + 1 + int(rng.integers(room_size)), x] = True
    # horizontal walls between vertical neighbours
    for j in range(ny - 1):
        for i in range(nx):
            y = (j + 1) * pitch
            cells[y, i * pitch + 1 + int(rng.integers(room_size))] = True
    return GridMap(cells)

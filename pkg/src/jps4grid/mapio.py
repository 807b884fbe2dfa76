"""Reader and writer for the MovingAI ``.map`` text format."""

from __future__ import annotations

import os
from typing import Union

import numpy as np

from .grid import GridError, GridMap

PASSABLE_CODES = frozenset(".G")

Source = Union[bytes, str]


class MapFormatError(GridError):
    pass


def _text(data: Source) -> str:
    if isinstance(data, bytes):
        return data.decode("ascii", errors="replace")
    return data


def parse_map(data: Source) -> GridMap:
    """Parse ``.map`` text. Only ``.`` and ``G`` are passable.

    Swamp, water, trees, out-of-bounds and any unknown code all become
    blocked cells.
    """
    lines = _text(data).splitlines()
    header: dict[str, str] = {}
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line:
            continue
        if line.lower() == "map":
            break
        key, _, value = line.partition(" ")
        header[key.lower()] = value.strip()
    else:
        raise MapFormatError("missing 'map' line")

    for key in ("type", "height", "width"):
        if key not in header:
            raise MapFormatError(f"missing header field {key!r}")
    try:
        height = int(header["height"])
        width = int(header["width"])
    except ValueError as exc:
        raise MapFormatError(f"non-numeric map dimensions: {exc}") from None
    if height < 1 or width < 1:
        raise MapFormatError(f"empty map ({width}x{height})")

    body = [ln.rstrip("\r\n") for ln in lines[i:]]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != height:
        raise MapFormatError(f"header says height {height}, body has {len(body)} rows")
    cells = np.zeros((height, width), dtype=np.bool_)
    for y, row in enumerate(body):
        if len(row) != width:
            raise MapFormatError(
                f"row {y} has {len(row)} columns, header says width {width}"
            )
        cells[y] = [ch in PASSABLE_CODES for ch in row]
    return GridMap(cells)


def format_map(grid: GridMap) -> str:
    lines = ["type octile", f"height {grid.height}", f"width {grid.width}", "map"]
    lines.extend(grid.to_rows(".", "@"))
    return "\n".join(lines) + "\n"


def load_map(path: Union[str, os.PathLike]) -> GridMap:
    with open(path, "rb") as fh:
        return parse_map(fh.read())


def save_map(grid: GridMap, path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_map(grid))

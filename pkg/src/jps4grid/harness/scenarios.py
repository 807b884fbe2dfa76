"""MovingAI ``.scen`` problem lists and the empty-map problem generator."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from ..grid import Coord, GridError


class ScenarioFormatError(GridError):
    pass


@dataclass(frozen=True)
class Scenario:
    map_name: str
    width: int
    height: int
    start: Coord
    goal: Coord
    declared_length: float = 0.0
    bucket: int = 0

    def __post_init__(self):
        object.__setattr__(self, "start", Coord(*self.start))
        object.__setattr__(self, "goal", Coord(*self.goal))
        for name in ("start", "goal"):
            c = getattr(self, name)
            if not (0 <= c.x < self.width and 0 <= c.y < self.height):
                raise ScenarioFormatError(
                    f"{name} {tuple(c)} outside declared {self.width}x{self.height}"
                )


def _fields(line: str) -> list[str]:
    # map names may contain spaces when the file is tab separated
    return line.split("\t") if "\t" in line else line.split()


def parse_scen(data: Union[bytes, str]) -> list[Scenario]:
    """Parse ``.scen`` text.

    The stored length is the file's octile figure and is kept for reference
    only; 4-connected optima are always recomputed.
    """
    text = data.decode("utf-8", errors="replace") if isinstance(data, bytes) else data
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line.lower().startswith("version"):
            continue
        cols = [c.strip() for c in _fields(line)]
        if len(cols) != 9:
            raise ScenarioFormatError(f"line {lineno}: expected 9 columns, got {len(cols)}")
        try:
            bucket, w, h, sx, sy, gx, gy = (int(cols[i]) for i in (0, 2, 3, 4, 5, 6, 7))
            length = float(cols[8])
        except ValueError as exc:
            raise ScenarioFormatError(f"line {lineno}: {exc}") from None
        try:
            out.append(Scenario(cols[1], w, h, Coord(sx, sy), Coord(gx, gy), length, bucket))
        except ScenarioFormatError as exc:
            raise ScenarioFormatError(f"line {lineno}: {exc}") from None
    return out


def format_scen(scenarios: Iterable[Scenario]) -> str:
    lines = ["version 1"]
    for s in scenarios:
        lines.append("\t".join([
            str(s.bucket), s.map_name, str(s.width), str(s.height),
            str(s.start.x), str(s.start.y), str(s.goal.x), str(s.goal.y),
            repr(float(s.declared_length)),
        ]))
    return "\n".join(lines) + "\n"


def load_scen(path: Union[str, os.PathLike]) -> list[Scenario]:
    with open(path, "rb") as fh:
        return parse_scen(fh.read())


def save_scen(scenarios: Iterable[Scenario], path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_scen(scenarios))


def _offsets(length: int, side: int) -> list[tuple[int, int, int]]:
    """``(dx, dy, count)`` for every offset at Manhattan distance *length*."""
    out = []
    for dx in range(-length, length + 1):
        rest = length - abs(dx)
        for dy in {rest, -rest}:
            count = (side - abs(dx)) * (side - abs(dy))
            if count > 0:
                out.append((dx, dy, count))
    return out


def generate_empty_problems(
    side: int,
    per_length: int,
    max_length: int,
    seed: int,
    map_name: str | None = None,
    min_length: int = 1,
) -> list[Scenario]:
    """*per_length* start/goal pairs for every distance ``min_length..max_length``.

    Pairs are distinct while enough exist at a given distance; otherwise
    the full set is cycled to make up the count.
    """
    if side < 1 or per_length < 1 or min_length < 1:
        raise GridError("side, per_length and min_length must be positive")
    if max_length > 2 * (side - 1):
        raise GridError(f"distance {max_length} does not fit on a {side}x{side} map")
    map_name = map_name or f"empty{side}.map"
    rng = np.random.default_rng(seed)
    out = []
    for length in range(min_length, max_length + 1):
        offsets = _offsets(length, side)
        total = sum(c for _, _, c in offsets)
        if total <= per_length:
            pairs = [
                ((x, y), (x + dx, y + dy))
                for dx, dy, _ in offsets
                for x in range(max(0, -dx), side - max(0, dx))
                for y in range(max(0, -dy), side - max(0, dy))
            ]
            order = rng.permutation(len(pairs))
            chosen = [pairs[order[i % len(pairs)]] for i in range(per_length)]
        else:
            weights = np.array([c for _, _, c in offsets], dtype=float) / total
            seen = set()
            chosen = []
            while len(chosen) < per_length:
                dx, dy, _ = offsets[rng.choice(len(offsets), p=weights)]
                x = int(rng.integers(max(0, -dx), side - max(0, dx)))
                y = int(rng.integers(max(0, -dy), side - max(0, dy)))
                pair = ((x, y), (x + dx, y + dy))
                if pair not in seen:
                    seen.add(pair)
                    chosen.append(pair)
        for a, b in chosen:
            out.append(Scenario(map_name, side, side, Coord(*a), Coord(*b), float(length), length))
    return out

"""Speedup aggregation and CSV output."""

from __future__ import annotations

import csv
import io
import math
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import IO, Iterable, Sequence, Union

from ..search import SearchMetrics
from .runner import RunRecord

RECORD_HEADER = (
    "scenario_id", "map", "algorithm", "length", "time_ns",
    "expanded", "open_pushes", "open_pops", "max_open", "visited",
)
SPEEDUP_HEADER = ("path_length", "mean_speedup", "problem_count")

#: ``length`` value written for unreachable outcomes
UNREACHABLE = -1


class ReportError(ValueError):
    pass


@dataclass(frozen=True)
class SpeedupRow:
    path_length: int
    mean_speedup: float
    problem_count: int


def speedup_report(
    records: Iterable[RunRecord], baseline: str = "astar", candidate: str = "jps4"
) -> list[SpeedupRow]:
    """Mean wall-time speedup of *candidate* over *baseline* per path length.

    Per scenario the speedup is mean baseline time over mean candidate
    time; rows average those ratios over all solved scenarios of the same
    optimal length. Unreachable scenarios are left out.
    """
    times = defaultdict(lambda: defaultdict(list))
    lengths = {}
    for r in records:
        if r.algorithm not in (baseline, candidate):
            continue
        times[r.scenario_id][r.algorithm].append(r.metrics.wall_time)
        if r.found:
            lengths[r.scenario_id] = r.length
    if not times:
        raise ReportError("no records to report")

    by_length = defaultdict(list)
    for sid, per_algo in times.items():
        if sid not in lengths or baseline not in per_algo or candidate not in per_algo:
            continue
        base = sum(per_algo[baseline]) / len(per_algo[baseline])
        cand = sum(per_algo[candidate]) / len(per_algo[candidate])
        if cand <= 0 or base <= 0:
            continue
        by_length[lengths[sid]].append(base / cand)
    if not by_length:
        raise ReportError(f"no scenario solved by both {baseline} and {candidate}")
    return [
        SpeedupRow(length, math.fsum(vals) / len(vals), len(vals))
        for length, vals in sorted(by_length.items())
    ]


def _record_row(r: RunRecord) -> list:
    m = r.metrics
    return [
        r.scenario_id, r.map_name, r.algorithm,
        UNREACHABLE if r.length is None else r.length,
        m.wall_time, m.expanded, m.open_pushes, m.open_pops, m.max_open, m.visited,
    ]


def format_csv(items: Sequence[Union[RunRecord, SpeedupRow]]) -> str:
    items = list(items)
    if not items:
        raise ReportError("nothing to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(items[0], SpeedupRow):
        writer.writerow(SPEEDUP_HEADER)
        for row in items:
            writer.writerow([row.path_length, repr(float(row.mean_speedup)), row.problem_count])
    else:
        writer.writerow(RECORD_HEADER)
        writer.writerows(_record_row(r) for r in items)
    return buf.getvalue()


def emit_csv(
    items: Sequence[Union[RunRecord, SpeedupRow]],
    destination: Union[str, os.PathLike, IO[bytes], None] = None,
) -> bytes:
    """Encode as UTF-8 CSV and write to *destination* when given."""
    data = format_csv(items).encode("utf-8")
    if destination is None:
        return data
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)
    return data


def _reader(source) -> csv.DictReader:
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str) and "\n" not in source and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    elif isinstance(source, os.PathLike):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    return csv.DictReader(io.StringIO(source))


def read_records(source) -> list[RunRecord]:
    reader = _reader(source)
    if tuple(reader.fieldnames or ()) != RECORD_HEADER:
        raise ReportError(f"unexpected record header {reader.fieldnames}")
    out = []
    for row in reader:
        length = int(row["length"])
        metrics = SearchMetrics(
            expanded=int(row["expanded"]),
            open_pushes=int(row["open_pushes"]),
            open_pops=int(row["open_pops"]),
            max_open=int(row["max_open"]),
            visited=int(row["visited"]),
            wall_time=int(row["time_ns"]),
        )
        out.append(RunRecord(
            int(row["scenario_id"]), row["map"], row["algorithm"],
            None if length == UNREACHABLE else length, metrics,
        ))
    return out


def read_speedup(source) -> list[SpeedupRow]:
    reader = _reader(source)
    if tuple(reader.fieldnames or ()) != SPEEDUP_HEADER:
        raise ReportError(f"unexpected speedup header {reader.fieldnames}")
    return [
        SpeedupRow(int(r["path_length"]), float(r["mean_speedup"]), int(r["problem_count"]))
        for r in reader
    ]

"""Benchmark execution with cross-algorithm optimality checking."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, Union

from ..grid import GridMap
from ..mapio import load_map
from ..search import ALGORITHMS, SearchInputError, SearchMetrics, SearchProblem, SearchResult
from .scenarios import Scenario

log = logging.getLogger(__name__)

Algorithm = Callable[[SearchProblem], SearchResult]


class BenchmarkError(RuntimeError):
    pass


class MissingMapError(BenchmarkError):
    pass


class OptimalityViolation(BenchmarkError):
    """Two algorithms disagreed on the optimal length of a scenario."""


class NondeterminismError(BenchmarkError):
    """Counters changed between repetitions of the same run."""


@dataclass(frozen=True)
class RunRecord:
    scenario_id: int
    map_name: str
    algorithm: str
    length: Optional[int]
    metrics: SearchMetrics

    @property
    def found(self) -> bool:
        return self.length is not None


class MapStore:
    """Loads ``.map`` files from a directory on first use."""

    def __init__(self, root: Union[str, os.PathLike], preloaded: Mapping[str, GridMap] = ()):
        self.root = os.fspath(root)
        self._cache = dict(preloaded)

    def __getitem__(self, name: str) -> GridMap:
        if name not in self._cache:
            for candidate in (os.path.join(self.root, name),
                              os.path.join(self.root, os.path.basename(name))):
                if os.path.isfile(candidate):
                    self._cache[name] = load_map(candidate)
                    break
            else:
                raise MissingMapError(f"map {name!r} not found under {self.root}")
        return self._cache[name]


def _resolve(algorithms) -> dict[str, Algorithm]:
    if isinstance(algorithms, Mapping):
        return dict(algorithms)
    out = {}
    for name in algorithms:
        if name not in ALGORITHMS:
            raise BenchmarkError(f"unknown algorithm {name!r}")
        out[name] = ALGORITHMS[name]
    return out


def _lookup(maps, name: str) -> GridMap:
    try:
        return maps[name]
    except KeyError:
        raise MissingMapError(f"map {name!r} not available") from None


def run_scenario(
    sid: int,
    scenario: Scenario,
    grid: GridMap,
    algorithms: Mapping[str, Algorithm],
    repetitions: int = 1,
    warmup: bool = True,
) -> list[RunRecord]:
    if (grid.width, grid.height) != (scenario.width, scenario.height):
        log.warning("scenario %d declares %dx%d but map %s is %dx%d", sid,
                    scenario.width, scenario.height, scenario.map_name, grid.width, grid.height)
    try:
        problem = SearchProblem(grid, scenario.start, scenario.goal)
    except SearchInputError as exc:
        # endpoint on terrain that was collapsed to blocked
        log.warning("scenario %d: %s; recorded as unreachable", sid, exc)
        return [
            RunRecord(sid, scenario.map_name, name, None, SearchMetrics())
            for name in algorithms
            for _ in range(repetitions)
        ]

    records = []
    lengths = {}
    for name, algo in algorithms.items():
        if warmup:
            algo(problem)
        first = None
        for _ in range(repetitions):
            result = algo(problem)
            if first is None:
                first = result
            elif result.metrics.counters() != first.metrics.counters() or result.length != first.length:
                raise NondeterminismError(
                    f"scenario {sid} {name}: counters {result.metrics.counters()} "
                    f"!= {first.metrics.counters()} across repetitions"
                )
            records.append(RunRecord(sid, scenario.map_name, name, result.length, result.metrics))
        lengths[name] = first.length
    if len(set(lengths.values())) > 1:
        detail = ", ".join(f"{k}={'unreachable' if v is None else v}" for k, v in lengths.items())
        raise OptimalityViolation(
            f"scenario {sid} ({scenario.map_name} {tuple(scenario.start)} -> "
            f"{tuple(scenario.goal)}): lengths disagree: {detail}"
        )
    return records


def _pin_worker(cores):
    if hasattr(os, "sched_setaffinity") and cores:
        ident = os.getpid() % len(cores)
        os.sched_setaffinity(0, {cores[ident]})


def _worker_chunk(args):
    chunk, map_root, names, repetitions, warmup = args
    store = MapStore(map_root)
    algos = _resolve(names)
    out = []
    for sid, sc in chunk:
        out.extend(run_scenario(sid, sc, store[sc.map_name], algos, repetitions, warmup))
    return out


def run_benchmark(
    scenarios: Sequence[Scenario],
    maps,
    algorithms: Union[Sequence[str], Mapping[str, Algorithm]] = ("astar", "jps4"),
    repetitions: int = 1,
    warmup: bool = True,
    workers: int = 1,
) -> list[RunRecord]:
    """Run every scenario with every algorithm *repetitions* times.

    *maps* is anything indexable by map name, typically a :class:`MapStore`.
    Counters are required to be identical across repetitions and all
    algorithms must agree on the optimal length; either failure aborts.

    ``workers > 1`` runs scenarios in separate processes, each pinned to
    its own core where the platform allows. It needs a :class:`MapStore`
    and algorithm names rather than callables.
    """
    if repetitions < 1:
        raise BenchmarkError("repetitions must be at least 1")
    algos = _resolve(algorithms)
    indexed = list(enumerate(scenarios))
    if workers <= 1:
        records = []
        for sid, sc in indexed:
            records.extend(run_scenario(sid, sc, _lookup(maps, sc.map_name), algos, repetitions, warmup))
        return records

    if not isinstance(maps, MapStore) or isinstance(algorithms, Mapping):
        raise BenchmarkError("parallel runs need a MapStore and algorithm names")
    cores = sorted(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else []
    chunks = [indexed[i::workers] for i in range(workers)]
    jobs = [(c, maps.root, list(algos), repetitions, warmup) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=workers, initializer=_pin_worker, initargs=(cores,)) as pool:
        parts = list(pool.map(_worker_chunk, jobs))
    records = [r for part in parts for r in part]
    records.sort(key=lambda r: r.scenario_id)
    return records

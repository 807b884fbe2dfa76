"""Array-level search kernels, compiled with numba unless disabled.

The grid arrives as a flat ``uint8`` array of the map padded with a
one-cell blocked border (row stride ``stride = width + 2``), so a probe
never needs a bounds check. Cells are addressed by their flat index in
that padded array.

Per-cell scratch state lives in a reusable :class:`Workspace`. Instead of
clearing it between searches, each search gets a fresh ``run`` number and
a cell's entry is only trusted when its stamp equals ``run``.

Each kernel returns ``found, waypoints, counters, expanded``: the parent
chain from start to goal, ``[expanded, open_pushes, open_pops, max_open,
visited]``, and the closed nodes in expansion order.

The open list is a binary min-heap keyed on ``(f, -g, seq)``: lowest f,
then larger g, then first pushed. Improved nodes are re-pushed and stale
entries are dropped when popped (they count as pops, not expansions).
"""

import threading

import numpy as np

from ._accel import njit

# direction codes match grid.Direction: UP, DOWN, LEFT, RIGHT
OPPOSITE = np.array([1, 0, 3, 2], dtype=np.int64)


def pad(cells):
    """Flat padded copy of a ``(height, width)`` boolean grid."""
    h, w = cells.shape
    out = np.zeros((h + 2, w + 2), dtype=np.uint8)
    out[1:-1, 1:-1] = cells
    return out.ravel()


class Workspace:
    """Scratch buffers for grids with ``n`` padded cells."""

    def __init__(self, n):
        self.n = n
        self.run = 0
        self.g = np.empty(n, dtype=np.int64)
        self.parent = np.empty(n, dtype=np.int64)
        self.arrival = np.empty(n, dtype=np.int8)
        self.g_at = np.zeros(n, dtype=np.int64)
        self.closed_at = np.zeros(n, dtype=np.int64)
        self.seen_at = np.zeros(n, dtype=np.int64)
        self.expanded = np.empty(n, dtype=np.int64)
        cap = 4 * n + 1
        self.heap = np.empty((cap, 4), dtype=np.int64)

    def next_run(self):
        self.run += 1
        return self.run


_local = threading.local()


def workspace(n):
    """Thread-local workspace big enough for *n* padded cells."""
    ws = getattr(_local, "ws", None)
    if ws is None or ws.n != n:
        ws = Workspace(n)
        _local.ws = ws
    return ws


@njit
def _before(heap, i, j):
    if heap[i, 0] != heap[j, 0]:
        return heap[i, 0] < heap[j, 0]
    if heap[i, 1] != heap[j, 1]:
        return heap[i, 1] > heap[j, 1]
    return heap[i, 2] < heap[j, 2]


@njit
def _swap(heap, i, j):
    for r in range(4):
        t = heap[i, r]
        heap[i, r] = heap[j, r]
        heap[j, r] = t


@njit
def _heap_push(heap, size, f, g, seq, node):
    i = size
    heap[i, 0] = f
    heap[i, 1] = g
    heap[i, 2] = seq
    heap[i, 3] = node
    while i > 0:
        parent = (i - 1) >> 1
        if not _before(heap, i, parent):
            break
        _swap(heap, i, parent)
        i = parent
    return size + 1


@njit
def _heap_pop(heap, size):
    # caller reads slot 0 first
    size -= 1
    if size > 0:
        _swap(heap, 0, size)
        i = 0
        while True:
            left = 2 * i + 1
            if left >= size:
                break
            best = left
            right = left + 1
            if right < size and _before(heap, right, left):
                best = right
            if not _before(heap, best, i):
                break
            _swap(heap, i, best)
            i = best
    return size


@njit
def _chain(parent, goal, start):
    n = 1
    cur = goal
    while cur != start:
        n += 1
        cur = parent[cur]
    out = np.empty(n, dtype=np.int64)
    cur = goal
    for k in range(n - 1, -1, -1):
        out[k] = cur
        if k > 0:
            cur = parent[cur]
    return out


@njit
def _see(seen_at, run, i):
    if seen_at[i] != run:
        seen_at[i] = run
        return 1
    return 0


@njit
def _border_seen(seen_at, run, stride, rows):
    """Probes of the padding ring; subtracted so visited counts real cells only."""
    n = 0
    last = (rows - 1) * stride
    for x in range(stride):
        if seen_at[x] == run:
            n += 1
        if seen_at[last + x] == run:
            n += 1
    for y in range(1, rows - 1):
        if seen_at[y * stride] == run:
            n += 1
        if seen_at[y * stride + stride - 1] == run:
            n += 1
    return n


@njit
def _manhattan(a, b, stride):
    ay = a // stride
    by = b // stride
    return abs(ay - by) + abs((a - ay * stride) - (b - by * stride))


@njit
def astar_kernel(grid, stride, start, goal, order, run,
                 g, parent, g_at, closed_at, seen_at, expanded, heap):
    offsets = np.array([-stride, stride, -1, 1], dtype=np.int64)
    n_expanded = 0
    pushes = 1
    pops = 0
    max_open = 1
    visited = _see(seen_at, run, start)
    g[start] = 0
    g_at[start] = run
    size = _heap_push(heap, 0, _manhattan(start, goal, stride), 0, 0, start)
    seq = 1
    found = False
    while size > 0:
        node = heap[0, 3]
        gn = heap[0, 1]
        size = _heap_pop(heap, size)
        pops += 1
        if closed_at[node] == run or gn != g[node]:
            continue
        closed_at[node] = run
        expanded[n_expanded] = node
        n_expanded += 1
        if node == goal:
            found = True
            break
        for k in range(4):
            ni = node + offsets[order[k]]
            visited += _see(seen_at, run, ni)
            if grid[ni] == 0 or closed_at[ni] == run:
                continue
            ng = gn + 1
            if g_at[ni] != run or ng < g[ni]:
                g[ni] = ng
                g_at[ni] = run
                parent[ni] = node
                size = _heap_push(heap, size, ng + _manhattan(ni, goal, stride), ng, seq, ni)
                seq += 1
                pushes += 1
                if size > max_open:
                    max_open = size
    visited -= _border_seen(seen_at, run, stride, grid.size // stride)
    counters = np.array([n_expanded, pushes, pops, max_open, visited], dtype=np.int64)
    if found:
        waypoints = _chain(parent, goal, start)
    else:
        waypoints = np.empty(0, dtype=np.int64)
    return found, waypoints, counters, expanded[:n_expanded].copy()


@njit
def jps4_kernel(grid, stride, start, goal, order, run,
                g, parent, arrival, g_at, closed_at, seen_at, expanded, heap):
    offsets = np.array([-stride, stride, -1, 1], dtype=np.int64)
    n_expanded = 0
    pushes = 1
    pops = 0
    max_open = 1
    visited = _see(seen_at, run, start)
    g[start] = 0
    g_at[start] = run
    arrival[start] = -1
    size = _heap_push(heap, 0, _manhattan(start, goal, stride), 0, 0, start)
    seq = 1
    found = False
    while size > 0:
        node = heap[0, 3]
        gn = heap[0, 1]
        size = _heap_pop(heap, size)
        pops += 1
        if closed_at[node] == run or gn != g[node]:
            continue
        closed_at[node] = run
        expanded[n_expanded] = node
        n_expanded += 1
        if node == goal:
            found = True
            break
        a = arrival[node]
        for k in range(4):
            d = order[k]
            step = offsets[d]
            if a >= 2:
                # horizontal arrival: everything but the way back
                if d == OPPOSITE[a]:
                    continue
            elif a >= 0:
                # vertical arrival: straight on, plus forced sides
                if d != a:
                    if d < 2:
                        continue
                    side = node + step
                    behind = node - offsets[a] + step
                    visited += _see(seen_at, run, side) + _see(seen_at, run, behind)
                    if grid[side] == 0 or grid[behind] != 0:
                        continue
            # jump along d
            prev = node
            jp = -1
            while True:
                cur = prev + step
                visited += _see(seen_at, run, cur)
                if grid[cur] == 0:
                    break
                if d >= 2:
                    jp = cur
                    break
                visited += (_see(seen_at, run, cur - 1) + _see(seen_at, run, prev - 1)
                            + _see(seen_at, run, cur + 1) + _see(seen_at, run, prev + 1))
                if (grid[cur - 1] != 0 and grid[prev - 1] == 0) or (
                    grid[cur + 1] != 0 and grid[prev + 1] == 0
                ):
                    jp = cur
                    break
                if cur == goal:
                    jp = cur
                    break
                prev = cur
            if jp < 0 or closed_at[jp] == run:
                continue
            ng = gn + _manhattan(node, jp, stride)
            if g_at[jp] != run or ng < g[jp]:
                g[jp] = ng
                g_at[jp] = run
                parent[jp] = node
                arrival[jp] = d
                size = _heap_push(heap, size, ng + _manhattan(jp, goal, stride), ng, seq, jp)
                seq += 1
                pushes += 1
                if size > max_open:
                    max_open = size
    visited -= _border_seen(seen_at, run, stride, grid.size // stride)
    counters = np.array([n_expanded, pushes, pops, max_open, visited], dtype=np.int64)
    if found:
        waypoints = _chain(parent, goal, start)
    else:
        waypoints = np.empty(0, dtype=np.int64)
    return found, waypoints, counters, expanded[:n_expanded].copy()

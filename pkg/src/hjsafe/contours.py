"""Marching-squares contour extraction on node fields, with resampling."""

from __future__ import annotations

import numpy as np

from .grids import Grid2D

# Edge keys: (axis, i, j) identifies the grid edge starting at node (i, j)
# and running one cell in +axis direction. A contour crossing lives on at
# most one point of an edge, so keys double as vertex identities when
# chaining segments into polylines.


def _edge_point(key, F, level, x1n, x2n):
    axis, i, j = key
    if axis == 0:
        f0, f1 = F[i, j], F[i + 1, j]
        t = 0.5 if f1 == f0 else (level - f0) / (f1 - f0)
        return (x1n[i] + t * (x1n[i + 1] - x1n[i]), x2n[j])
    f0, f1 = F[i, j], F[i, j + 1]
    t = 0.5 if f1 == f0 else (level - f0) / (f1 - f0)
    return (x1n[i], x2n[j] + t * (x2n[j + 1] - x2n[j]))


def _cell_segments(i, j, F, level):
    """Segments (pairs of edge keys) crossing cell (i, j)."""
    f00 = F[i, j]
    f10 = F[i + 1, j]
    f01 = F[i, j + 1]
    f11 = F[i + 1, j + 1]
    case = ((f00 >= level) | ((f10 >= level) << 1)
            | ((f11 >= level) << 2) | ((f01 >= level) << 3))
    if case in (0, 15):
        return []
    bottom = (0, i, j)        # between (i,j) and (i+1,j)
    top = (0, i, j + 1)
    left = (1, i, j)          # between (i,j) and (i,j+1)
    right = (1, i + 1, j)
    table = {
        1: [(bottom, left)],
        2: [(bottom, right)],
        3: [(left, right)],
        4: [(top, right)],
        6: [(bottom, top)],
        7: [(left, top)],
        8: [(left, top)],
        9: [(bottom, top)],
        12: [(left, right)],
        13: [(bottom, right)],
        14: [(bottom, left)],
    }
    if case in (5, 10):
        # Saddle: disambiguate with the cell-center value.
        center = 0.25 * (f00 + f10 + f01 + f11)
        if case == 5:
            if center >= level:
                return [(bottom, right), (left, top)]
            return [(bottom, left), (top, right)]
        if center >= level:
            return [(bottom, left), (top, right)]
        return [(bottom, right), (left, top)]
    return table[case]


def extract_contours(grid: Grid2D, field: np.ndarray, level: float):
    """Polylines of the `level` contour; each an (m, 2) array of (x1, x2).

    Closed loops repeat their first point at the end.
    """
    F = np.asarray(field, dtype=float)
    adjacency: dict = {}
    for i in range(grid.n1 - 1):
        for j in range(grid.n2 - 1):
            for a, b in _cell_segments(i, j, F, level):
                adjacency.setdefault(a, []).append(b)
                adjacency.setdefault(b, []).append(a)
    x1n, x2n = grid.x1_nodes(), grid.x2_nodes()
    visited = set()
    polylines = []

    def walk(start):
        # Follow unused adjacencies from `start` as far as possible.
        path = [start]
        cur = start
        prev = None
        while True:
            nxt = None
            for cand in adjacency[cur]:
                if (cur, cand) not in visited:
                    nxt = cand
                    break
            if nxt is None:
                break
            visited.add((cur, nxt))
            visited.add((nxt, cur))
            path.append(nxt)
            prev, cur = cur, nxt
            if cur == start:
                break
        return path

    # Open chains first (endpoints have odd degree), then remaining loops.
    endpoints = [k for k, v in adjacency.items() if len(v) % 2 == 1]
    for start in endpoints:
        if any((start, c) not in visited for c in adjacency[start]):
            path = walk(start)
            if len(path) > 1:
                polylines.append(path)
    for start in adjacency:
        if any((start, c) not in visited for c in adjacency[start]):
            path = walk(start)
            if len(path) > 1:
                polylines.append(path)

    out = []
    for path in polylines:
        pts = np.array([_edge_point(k, F, level, x1n, x2n) for k in path])
        out.append(pts)
    return out


def resample_arclength(polylines, count: int) -> np.ndarray:
    """Exactly `count` points spread uniformly in arc length over all lines.

    Returns an empty (0, 2) array when there is nothing to sample.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    segs = []
    total = 0.0
    for line in polylines:
        if len(line) < 2:
            continue
        d = np.linalg.norm(np.diff(line, axis=0), axis=1)
        segs.append((line, np.concatenate([[0.0], np.cumsum(d)])))
        total += d.sum()
    if not segs:
        if polylines:  # degenerate: isolated points
            return np.repeat(np.asarray(polylines[0][:1], dtype=float),
                             count, axis=0)
        return np.empty((0, 2))
    targets = (np.arange(count) + 0.5) * (total / count)
    points = np.empty((count, 2))
    base = 0.0
    k = 0
    for line, cum in segs:
        length = cum[-1]
        while k < count and targets[k] <= base + length + 1e-12:
            s = min(max(targets[k] - base, 0.0), length)
            idx = int(np.searchsorted(cum, s, side="right") - 1)
            idx = min(idx, len(line) - 2)
            seg_len = cum[idx + 1] - cum[idx]
            t = 0.0 if seg_len == 0 else (s - cum[idx]) / seg_len
            points[k] = line[idx] + t * (line[idx + 1] - line[idx])
            k += 1
        base += length
    while k < count:  # numerical stragglers land on the last point
        points[k] = segs[-1][0][-1]
        k += 1
    return points

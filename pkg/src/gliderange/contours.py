"""Marching-squares contour extraction for node fields.

Cells touching +inf values produce open contours; the crossing point on
an edge with an infinite endpoint collapses onto the finite endpoint.
Saddle cells are split by comparing the cell average with the level, so
output is deterministic across runs.
"""

from __future__ import annotations

import math

import numpy as np

from .scenario import GridSpec

INF = float("inf")


def _interp(pa, va, pb, vb, level):
    """Crossing point on edge a-b; an infinite endpoint pins it to the other."""
    if not math.isfinite(va):
        return pb
    if not math.isfinite(vb):
        return pa
    t = 0.5 if vb == va else (level - va) / (vb - va)
    t = min(max(t, 0.0), 1.0)
    return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))


def _cell_segments(corners, values, level):
    """Contour segments inside one cell.

    ``corners``/``values`` order: sw, se, ne, nw.  Returns a list of
    ((x, y), (x, y)) pairs.
    """
    above = [v >= level for v in values]
    case = (above[0] | (above[1] << 1) | (above[2] << 2) | (above[3] << 3))
    if case in (0, 15):
        return []
    sw, se, ne, nw = corners
    vsw, vse, vne, vnw = values
    bottom = _interp(sw, vsw, se, vse, level)
    right = _interp(se, vse, ne, vne, level)
    top = _interp(nw, vnw, ne, vne, level)
    left = _interp(sw, vsw, nw, vnw, level)
    table = {
        1: [(left, bottom)], 14: [(bottom, left)],
        2: [(bottom, right)], 13: [(right, bottom)],
        3: [(left, right)], 12: [(right, left)],
        4: [(right, top)], 11: [(top, right)],
        6: [(bottom, top)], 9: [(top, bottom)],
        7: [(left, top)], 8: [(top, left)],
    }
    if case in table:
        return table[case]
    # Saddles: connect according to the cell average.
    finite = [v for v in values if math.isfinite(v)]
    center_above = (sum(finite) / len(finite) >= level) if finite else True
    if case == 5:
        if center_above:
            return [(left, top), (right, bottom)]
        return [(left, bottom), (right, top)]
    if center_above:
        return [(bottom, left), (top, right)]
    return [(bottom, right), (top, left)]


def _stitch(segments):
    """Join segments into polylines by matching endpoints."""
    def key(p):
        return (round(p[0], 9), round(p[1], 9))

    # Drop degenerate segments (level passing exactly through a node).
    segments = [(a, b) for a, b in segments if key(a) != key(b)]
    starts: dict = {}
    for idx, (a, b) in enumerate(segments):
        starts.setdefault(key(a), []).append(idx)
    used = [False] * len(segments)
    polylines = []
    for idx in range(len(segments)):
        if used[idx]:
            continue
        used[idx] = True
        a, b = segments[idx]
        line = [a, b]
        # Extend forward.
        while True:
            candidates = starts.get(key(line[-1]), [])
            nxt = next((c for c in candidates if not used[c]), None)
            if nxt is None:
                break
            used[nxt] = True
            line.append(segments[nxt][1])
        # Extend backward by finding a segment that ends at our head.
        while True:
            head = key(line[0])
            prev = None
            for c, (sa, sb) in enumerate(segments):
                if not used[c] and key(sb) == head:
                    prev = c
                    break
            if prev is None:
                break
            used[prev] = True
            line.insert(0, segments[prev][0])
        polylines.append(np.array(line))
    return polylines


def extract_contours(field: np.ndarray, levels, grid: GridSpec):
    """Contour polylines for each level.

    Returns a list of (level, [polyline arrays]) in the order given.
    """
    field = np.asarray(field, dtype=float)
    h = grid.spacing
    ox, oy = grid.origin
    out = []
    for level in levels:
        level = float(level)
        segments = []
        for row in range(grid.n_rows - 1):
            for col in range(grid.n_cols - 1):
                i = col + row * grid.n_cols
                vals = (field[i], field[i + 1],
                        field[i + 1 + grid.n_cols], field[i + grid.n_cols])
                corners = ((ox + col * h, oy + row * h),
                           (ox + (col + 1) * h, oy + row * h),
                           (ox + (col + 1) * h, oy + (row + 1) * h),
                           (ox + col * h, oy + (row + 1) * h))
                segments.extend(_cell_segments(corners, vals, level))
        out.append((level, _stitch(segments)))
    return out

"""Shared front-propagation machinery.

Node status bookkeeping, the min-priority queue used by all marching
solvers, grid adjacency (4-neighbor and triangulated), and the isotropic
update kernel that solves the local quadratic.
"""

from __future__ import annotations

import heapq
import math
from enum import IntEnum

import numpy as np

INF = float("inf")

# Neighbor order is fixed: up, right, down, left.
NEIGHBOR_ORDER = ("up", "right", "down", "left")


class NodeStatus(IntEnum):
    """Lifecycle of a grid node during a marching solve.

    Transitions only ever go FAR -> CONSIDERED -> KNOWN; a KNOWN node's
    value is final.
    """

    FAR = 0
    CONSIDERED = 1
    KNOWN = 2


class EmptyQueueError(Exception):
    pass


class FrontQueue:
    """Min-priority queue over nodes keyed by tentative value.

    Uses lazy deletion: re-pushing a node with a lower value supersedes
    the old entry, and stale entries are skipped on pop.  Ties are broken
    by node index (lowest first) so solves are deterministic.
    """

    def __init__(self):
        self._heap = []
        self._best = {}

    def __len__(self):
        return len(self._best)

    def push(self, node: int, value: float) -> None:
        """Insert node or decrease its key. Increases are ignored."""
        current = self._best.get(node)
        if current is not None and current <= value:
            return
        self._best[node] = value
        heapq.heappush(self._heap, (value, node))

    def pop_min(self) -> tuple[int, float]:
        """Pop the (node, value) pair with the smallest value."""
        while self._heap:
            value, node = heapq.heappop(self._heap)
            if self._best.get(node) == value:
                del self._best[node]
                return node, value
        raise EmptyQueueError("pop on empty front queue")


class Adjacency:
    """Neighbor lists for a rectangular grid.

    ``neighbors[i]`` holds the 4-neighbors of node ``i`` in the order
    up, right, down, left with -1 marking absent (boundary) slots.
    When ``triangulated`` is set, ``diagonals[i]`` adds the diagonal
    neighbors induced by splitting every grid square along its
    lower-left to upper-right diagonal.
    """

    def __init__(self, n_cols: int, n_rows: int, triangulated: bool = False):
        self.n_cols = n_cols
        self.n_rows = n_rows
        self.triangulated = triangulated
        n = n_cols * n_rows
        idx = np.arange(n)
        col = idx % n_cols
        row = idx // n_cols
        nb = np.full((n, 4), -1, dtype=np.int64)
        nb[row < n_rows - 1, 0] = idx[row < n_rows - 1] + n_cols      # up
        nb[col < n_cols - 1, 1] = idx[col < n_cols - 1] + 1           # right
        nb[row > 0, 2] = idx[row > 0] - n_cols                        # down
        nb[col > 0, 3] = idx[col > 0] - 1                             # left
        self.neighbors = nb
        diag = np.full((n, 2), -1, dtype=np.int64)
        if triangulated:
            up_right = (row < n_rows - 1) & (col < n_cols - 1)
            diag[up_right, 0] = idx[up_right] + n_cols + 1
            down_left = (row > 0) & (col > 0)
            diag[down_left, 1] = idx[down_left] - n_cols - 1
        self.diagonals = diag

    def all_neighbors(self, i: int) -> list[int]:
        """4-neighbors plus diagonal neighbors (if triangulated), -1 dropped."""
        out = [j for j in self.neighbors[i] if j >= 0]
        if self.triangulated:
            out.extend(j for j in self.diagonals[i] if j >= 0)
        return out


def eikonal_update(u_up: float, u_right: float, u_down: float, u_left: float,
                   h: float, g: float) -> float:
    """First-order upwind update for the isotropic front equation.

    Absent neighbors are passed as +inf.  Returns +inf iff all four
    inputs are +inf.
    """
    u_x = min(u_left, u_right)
    u_y = min(u_up, u_down)
    step = h / g
    if u_x == INF and u_y == INF:
        return INF
    diff = u_x - u_y
    if abs(diff) <= step:
        return 0.5 * (u_x + u_y + math.sqrt(2.0 * step * step - diff * diff))
    return min(u_x, u_y) + step

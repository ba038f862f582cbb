"""Nearest-frontier selection and A* travel over the known graph.

Edge cost is one hop; the heuristic is straight-line distance between
cell centres, which never exceeds hop count because adjacent centres are
exactly 1.0 apart. All tie-breaking is deterministic so identical queries
always return the identical path.
"""

from __future__ import annotations

import heapq
import math
from typing import Optional

from .hexgrid import HexCoord, cell_center
from .worldmap import ExplorationGraph


class PathNotFoundError(Exception):
    """Target unreachable in the known graph; upstream invariant broken."""


def euclidean_distance(a: HexCoord, b: HexCoord) -> float:
    ax, ay = cell_center(a)
    bx, by = cell_center(b)
    return math.hypot(bx - ax, by - ay)


def reachable_set(g: ExplorationGraph, origin: HexCoord) -> set[HexCoord]:
    """Every cell reachable from origin over known edges.

    Agents that start apart build disconnected known components until
    their explorations meet, so retargeting must stay within the caller's
    own component.
    """
    seen = {origin}
    queue = [origin]
    while queue:
        cur = queue.pop()
        for n in g.known_neighbors(cur):
            if n not in seen:
                seen.add(n)
                queue.append(n)
    return seen


def nearest_unvisited(
    g: ExplorationGraph,
    origin: HexCoord,
    exclude: frozenset[HexCoord] = frozenset(),
    within: Optional[set[HexCoord]] = None,
) -> Optional[HexCoord]:
    """Frontier cell closest to origin by straight-line distance.

    Ties go to the smaller (row, col). `exclude` skips cells claimed by
    other agents, `within` restricts to a reachable component; None means
    no eligible frontier remains.
    """
    best: Optional[tuple[float, int, int]] = None
    best_cell: Optional[HexCoord] = None
    for cell in g.frontier:
        if cell in exclude or (within is not None and cell not in within):
            continue
        key = (euclidean_distance(origin, cell), cell.row, cell.col)
        if best is None or key < best:
            best = key
            best_cell = cell
    return best_cell


def astar(g: ExplorationGraph, start: HexCoord, goal: HexCoord) -> list[HexCoord]:
    """Minimum-hop path from start to goal over known edges.

    Expansion order is (f, h, row, col); neighbors are pushed in direction
    order, so the returned path is fully deterministic, not just optimal.
    """
    if start == goal:
        return [start]
    h0 = euclidean_distance(start, goal)
    open_heap: list[tuple[float, float, int, int]] = [(h0, h0, start.row, start.col)]
    g_score: dict[HexCoord, int] = {start: 0}
    came_from: dict[HexCoord, HexCoord] = {}
    closed: set[HexCoord] = set()

    while open_heap:
        _, _, row, col = heapq.heappop(open_heap)
        cur = HexCoord(col, row)
        if cur in closed:
            continue
        if cur == goal:
            path = [cur]
            while cur != start:
                cur = came_from[cur]
                path.append(cur)
            path.reverse()
            return path
        closed.add(cur)
        tentative = g_score[cur] + 1
        for n in g.known_neighbors(cur):
            if n in closed:
                continue
            if tentative < g_score.get(n, math.inf):
                g_score[n] = tentative
                came_from[n] = cur
                h = euclidean_distance(n, goal)
                heapq.heappush(open_heap, (tentative + h, h, n.row, n.col))

    raise PathNotFoundError(f"no known path from {start} to {goal}")

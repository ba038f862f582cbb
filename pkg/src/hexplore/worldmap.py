"""The exploration graph agents build as they move.

Cells are nodes, discovered open passages are edges. Standing on a cell
reveals that cell's six sides and nothing farther, so the graph is always
a subgraph of the maze's true open adjacency.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

from .hexgrid import Direction, HexCoord, Maze, neighbor


class CellStatus(IntEnum):
    UNKNOWN = 0
    FRONTIER = 1  # seen through an open side, not yet entered
    VISITED = 2


class ExplorationGraph:
    """Shared (or private) map of visited cells and known open passages."""

    def __init__(self, d: int):
        self.d = d
        self.total_cells = d * d
        self.status = np.zeros((d, d), dtype=np.int8)
        # bit i set on (row, col) = known open passage on side i
        self.known_open = np.zeros((d, d), dtype=np.uint8)
        self.frontier: set[HexCoord] = set()
        self.visited_count = 0

    def cell_status(self, c: HexCoord) -> CellStatus:
        return CellStatus(self.status[c.row, c.col])

    def is_visited(self, c: HexCoord) -> bool:
        return self.status[c.row, c.col] == CellStatus.VISITED

    def known_dirs(self, c: HexCoord) -> list[Direction]:
        mask = self.known_open[c.row, c.col]
        return [di for di in Direction if mask & (1 << di)]

    def known_neighbors(self, c: HexCoord) -> list[HexCoord]:
        return [neighbor(c, di, self.d) for di in self.known_dirs(c)]

    def observe_and_visit(self, maze: Maze, c: HexCoord) -> list[HexCoord]:
        """Enter cell c: mark it visited, record its open sides, promote
        unknown neighbors to frontier.

        Returns the newly promoted frontier cells in direction order;
        revisiting a cell is a no-op returning [].
        """
        if not maze.in_bounds(c):
            raise ValueError(f"coordinate {c} out of bounds for d={maze.d}")
        if self.status[c.row, c.col] == CellStatus.VISITED:
            return []
        if self.status[c.row, c.col] == CellStatus.FRONTIER:
            self.frontier.discard(c)
        self.status[c.row, c.col] = CellStatus.VISITED
        self.visited_count += 1

        new_frontier: list[HexCoord] = []
        for di in maze.open_dirs(c):
            n = neighbor(c, di, maze.d)
            self.known_open[c.row, c.col] |= 1 << di
            self.known_open[n.row, n.col] |= 1 << di.inverse
            if self.status[n.row, n.col] == CellStatus.UNKNOWN:
                self.status[n.row, n.col] = CellStatus.FRONTIER
                self.frontier.add(n)
                new_frontier.append(n)
        return new_frontier

    def unvisited_cells(self) -> set[HexCoord]:
        """All known-but-unvisited (frontier) cells."""
        return set(self.frontier)

    def coverage(self) -> float:
        return self.visited_count / self.total_cells

    def is_fully_explored(self) -> bool:
        return self.visited_count == self.total_cells

    def known_edges(self) -> set[frozenset[HexCoord]]:
        edges: set[frozenset[HexCoord]] = set()
        for row in range(self.d):
            for col in range(self.d):
                c = HexCoord(col, row)
                mask = self.known_open[row, col]
                for di in Direction:
                    if mask & (1 << di):
                        edges.add(frozenset((c, neighbor(c, di, self.d))))
        return edges

    def validate(self, maze: Maze) -> None:
        """Cross-check every structural invariant against the ground truth."""
        assert self.visited_count == int(np.sum(self.status == CellStatus.VISITED))
        assert self.frontier == {
            HexCoord(col, row)
            for row in range(self.d)
            for col in range(self.d)
            if self.status[row, col] == CellStatus.FRONTIER
        }
        for edge in self.known_edges():
            a, b = tuple(edge)
            assert any(neighbor(a, di, self.d) == b and not maze.has_wall(a, di) for di in Direction), (
                f"known edge {a}-{b} is not an open maze edge"
            )
        for f in self.frontier:
            assert any(self.is_visited(n) for n in self.known_neighbors(f)), (
                f"frontier cell {f} has no visited known neighbor"
            )

"""Hexagonal grid geometry, maze representation and procedural generation.

Layout is odd-row-offset, pointy-top: cell (col, row) has its centre at
x = col + 0.5 * (row % 2), y = row * sqrt(3)/2, which puts the centres of
adjacent cells exactly one cell width apart in every direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .rng import stream

SQRT3_2 = math.sqrt(3.0) / 2.0

FULL_WALL_MASK = 0x3F


class Direction(IntEnum):
    """The six sides of a pointy-top hex cell, ordinal order E..SE."""

    E = 0
    NE = 1
    NW = 2
    W = 3
    SW = 4
    SE = 5

    @property
    def inverse(self) -> "Direction":
        return Direction((self + 3) % 6)


class HexCoord(NamedTuple):
    col: int
    row: int


# (dcol, drow) per direction; dcol of the four diagonal moves depends on row parity
_DELTAS_EVEN = {
    Direction.E: (1, 0),
    Direction.NE: (0, 1),
    Direction.NW: (-1, 1),
    Direction.W: (-1, 0),
    Direction.SW: (-1, -1),
    Direction.SE: (0, -1),
}
_DELTAS_ODD = {
    Direction.E: (1, 0),
    Direction.NE: (1, 1),
    Direction.NW: (0, 1),
    Direction.W: (-1, 0),
    Direction.SW: (0, -1),
    Direction.SE: (1, -1),
}


def neighbor(c: HexCoord, direction: Direction, d: int) -> Optional[HexCoord]:
    """Adjacent coordinate in `direction`, or None when it falls off the grid."""
    deltas = _DELTAS_ODD if c.row % 2 else _DELTAS_EVEN
    dc, dr = deltas[direction]
    col, row = c.col + dc, c.row + dr
    if 0 <= col < d and 0 <= row < d:
        return HexCoord(col, row)
    return None


def in_grid_directions(c: HexCoord, d: int) -> list[Direction]:
    """Directions whose neighbor exists on a d-by-d grid, ordinal order."""
    return [di for di in Direction if neighbor(c, di, d) is not None]


def degree(c: HexCoord, d: int) -> int:
    return len(in_grid_directions(c, d))


def cell_center(c: HexCoord) -> tuple[float, float]:
    """Centre of the cell in cell-width units (odd rows shifted right)."""
    return (c.col + 0.5 * (c.row % 2), c.row * SQRT3_2)


@dataclass(frozen=True)
class Maze:
    """A d-by-d hex maze; walls[row, col] is a 6-bit mask, bit i = wall on side i."""

    d: int
    seed: int
    walls: np.ndarray  # shape (d, d), dtype uint8

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"maze size must be >= 2, got {self.d}")
        if self.walls.shape != (self.d, self.d):
            raise ValueError("wall array shape does not match maze size")
        self.walls.flags.writeable = False

    def in_bounds(self, c: HexCoord) -> bool:
        return 0 <= c.col < self.d and 0 <= c.row < self.d

    def has_wall(self, c: HexCoord, direction: Direction) -> bool:
        return bool(self.walls[c.row, c.col] & (1 << direction))

    def wall_mask(self, c: HexCoord) -> int:
        return int(self.walls[c.row, c.col])

    def open_dirs(self, c: HexCoord) -> list[Direction]:
        """Sides of c without a wall, ordinal order.

        Open sides always lead to an in-grid neighbor (boundary sides are
        walls by construction), so each open direction is traversable.
        """
        if not self.in_bounds(c):
            raise ValueError(f"coordinate {c} out of bounds for d={self.d}")
        mask = self.walls[c.row, c.col]
        return [di for di in Direction if not mask & (1 << di)]

    def open_neighbors(self, c: HexCoord) -> list[HexCoord]:
        return [neighbor(c, di, self.d) for di in self.open_dirs(c)]

    def cells(self) -> Iterator[HexCoord]:
        for row in range(self.d):
            for col in range(self.d):
                yield HexCoord(col, row)


def open_sides(maze: Maze, c: HexCoord) -> set[Direction]:
    """Set of wall-free sides of c."""
    return set(maze.open_dirs(c))


def _carve(walls: np.ndarray, c: HexCoord, direction: Direction, d: int) -> None:
    n = neighbor(c, direction, d)
    walls[c.row, c.col] &= ~(1 << direction) & 0xFF
    walls[n.row, n.col] &= ~(1 << direction.inverse) & 0xFF


def generate_maze(d: int, seed: int) -> Maze:
    """Generate a connected maze where every cell has at least
    min(3, in-grid degree) open sides.

    Two passes: a randomized depth-first carve produces a spanning tree,
    then a row-major sweep opens extra random internal walls on any cell
    still below its openness quota. Pure function of (d, seed).
    """
    if d < 2:
        raise ValueError(f"maze size must be >= 2, got {d}")
    rng = stream(seed, "maze-gen")
    walls = np.full((d, d), FULL_WALL_MASK, dtype=np.uint8)

    # pass 1: randomized depth-first spanning tree
    start = HexCoord(int(rng.integers(d)), int(rng.integers(d)))
    visited = np.zeros((d, d), dtype=bool)
    visited[start.row, start.col] = True
    stack = [start]
    while stack:
        cur = stack[-1]
        options = [
            (di, n)
            for di in Direction
            if (n := neighbor(cur, di, d)) is not None and not visited[n.row, n.col]
        ]
        if not options:
            stack.pop()
            continue
        di, nxt = options[int(rng.integers(len(options)))]
        _carve(walls, cur, di, d)
        visited[nxt.row, nxt.col] = True
        stack.append(nxt)

    # pass 2: enforce the openness quota cell by cell
    for row in range(d):
        for col in range(d):
            c = HexCoord(col, row)
            internal = in_grid_directions(c, d)
            quota = min(3, len(internal))
            closed = [di for di in internal if walls[row, col] & (1 << di)]
            open_count = len(internal) - len(closed)
            while open_count < quota:
                di = closed.pop(int(rng.integers(len(closed))))
                _carve(walls, c, di, d)
                open_count += 1

    return Maze(d=d, seed=seed, walls=walls)


def save_maze(maze: Maze, path: str) -> None:
    """Write the line-oriented maze file format (round-trips bit-exactly)."""
    lines = [f"hexmaze v1 d={maze.d} seed={maze.seed}"]
    for row in range(maze.d):
        lines.append(" ".join(f"{int(m):02x}" for m in maze.walls[row]))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_maze(path: str) -> Maze:
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        parts = header.split()
        if len(parts) != 4 or parts[0] != "hexmaze" or parts[1] != "v1":
            raise ValueError(f"not a hexmaze v1 file: {header!r}")
        d = int(parts[2].removeprefix("d="))
        seed = int(parts[3].removeprefix("seed="))
        walls = np.zeros((d, d), dtype=np.uint8)
        for row in range(d):
            cells = fh.readline().split()
            if len(cells) != d:
                raise ValueError(f"maze file row {row} has {len(cells)} cells, expected {d}")
            walls[row] = [int(tok, 16) for tok in cells]
    return Maze(d=d, seed=seed, walls=walls)

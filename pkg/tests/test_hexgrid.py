import math
import os

import numpy as np
import pytest

from hexplore.hexgrid import (
    Direction,
    HexCoord,
    Maze,
    cell_center,
    degree,
    generate_maze,
    in_grid_directions,
    load_maze,
    neighbor,
    open_sides,
    save_maze,
)


def test_direction_inverse_round_trip():
    for di in Direction:
        assert di.inverse.inverse == di
    assert Direction.E.inverse == Direction.W
    assert Direction.NE.inverse == Direction.SW
    assert Direction.NW.inverse == Direction.SE


def test_interior_cell_has_six_neighbors():
    assert len(in_grid_directions(HexCoord(5, 5), 10)) == 6


def test_edge_cell_neighbor_absent():
    assert neighbor(HexCoord(0, 0), Direction.W, 10) is None


def test_neighbor_inverse_round_trip():
    for row in range(1, 9):
        for col in range(1, 9):
            c = HexCoord(col, row)
            for di in Direction:
                n = neighbor(c, di, 10)
                assert n is not None
                assert neighbor(n, di.inverse, 10) == c


def test_cell_center_values():
    assert cell_center(HexCoord(0, 0)) == (0.0, 0.0)
    assert cell_center(HexCoord(3, 0)) == (3.0, 0.0)
    x, y = cell_center(HexCoord(0, 2))
    assert x == 0.0
    assert abs(y - math.sqrt(3.0)) < 1e-12


def test_adjacent_centers_unit_spacing():
    # both intra-row and inter-row adjacency must be exactly one cell width
    for c in (HexCoord(4, 4), HexCoord(4, 5), HexCoord(2, 7)):
        for di in Direction:
            n = neighbor(c, di, 10)
            ax, ay = cell_center(c)
            bx, by = cell_center(n)
            assert abs(math.hypot(bx - ax, by - ay) - 1.0) < 1e-12


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def check_maze_invariants(maze: Maze):
    d = maze.d
    uf = UnionFind(d * d)
    for c in maze.cells():
        opens = maze.open_dirs(c)
        # boundary sides are walls, open sides all lead in-grid
        for di in Direction:
            n = neighbor(c, di, d)
            if n is None:
                assert maze.has_wall(c, di)
            else:
                # wall symmetry
                assert maze.has_wall(c, di) == maze.has_wall(n, di.inverse)
        # openness quota
        assert len(opens) >= min(3, degree(c, d))
        for di in opens:
            n = neighbor(c, di, d)
            uf.union(c.row * d + c.col, n.row * d + n.col)
    roots = {uf.find(i) for i in range(d * d)}
    assert len(roots) == 1, "maze is not connected"


def test_maze_invariants_random_sizes_and_seeds():
    rng = np.random.default_rng(20240811)
    for _ in range(1000):
        d = int(rng.integers(4, 21))
        seed = int(rng.integers(0, 2**63))
        check_maze_invariants(generate_maze(d, seed))


def test_generate_maze_deterministic():
    a = generate_maze(10, 42)
    b = generate_maze(10, 42)
    assert a.d == b.d and a.seed == b.seed
    assert np.array_equal(a.walls, b.walls)


def test_generate_maze_rejects_small():
    with pytest.raises(ValueError):
        generate_maze(1, 0)


def test_open_sides_matches_masks():
    maze = generate_maze(10, 7)
    for c in maze.cells():
        sides = open_sides(maze, c)
        assert len(sides) >= min(3, degree(c, 10))
        for di in sides:
            n = neighbor(c, di, 10)
            assert n is not None
            assert di.inverse in open_sides(maze, n)


def test_open_sides_out_of_bounds_rejected():
    maze = generate_maze(4, 1)
    with pytest.raises(ValueError):
        open_sides(maze, HexCoord(4, 0))


def test_maze_file_round_trip(tmp_path):
    maze = generate_maze(12, 90210)
    path = os.path.join(tmp_path, "maze.txt")
    save_maze(maze, path)
    loaded = load_maze(path)
    assert loaded.d == maze.d
    assert loaded.seed == maze.seed
    assert np.array_equal(loaded.walls, maze.walls)
    # byte-exact second save
    path2 = os.path.join(tmp_path, "maze2.txt")
    save_maze(loaded, path2)
    with open(path, "rb") as fa, open(path2, "rb") as fb:
        assert fa.read() == fb.read()


def test_maze_file_header_checked(tmp_path):
    path = os.path.join(tmp_path, "bad.txt")
    with open(path, "w") as fh:
        fh.write("notamaze v9 d=4 seed=0\n")
    with pytest.raises(ValueError):
        load_maze(path)

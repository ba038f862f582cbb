"""The four baseline exploration policies.

Plain DFS and BFS agents keep private maps and may re-cover each other's
ground; the collaborative variants share one map, never aim an exploring
move at a visited cell, and relocate to the nearest frontier (straight-line
metric, A* travel) when their branch runs out.

Backtrack accounting differs by policy, matching how each is defined:
DFS counts stack-pop moves, plain BFS counts travel hops that land on
already-visited cells, and the collaborative variants count every travel
hop.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .hexgrid import Direction, HexCoord, Maze, neighbor
from .pathfind import astar, nearest_unvisited, reachable_set
from .worldmap import ExplorationGraph

EXPLORE = "E"
TRAVEL = "T"
COLLIDE = "C"

METHODS = ("dfs", "bfs", "cdfs", "cbfs")


class InvariantError(RuntimeError):
    """An internal exploration invariant was violated."""


class Move(NamedTuple):
    agent_id: int
    src: HexCoord
    dst: HexCoord
    mode: str


@dataclass
class CollabCoordination:
    """State shared by all agents of a collaborative policy."""

    queue: deque[HexCoord] = field(default_factory=deque)
    claims: dict[HexCoord, int] = field(default_factory=dict)


@dataclass
class ClassicalAgent:
    id: int
    pos: HexCoord
    stack: list[HexCoord] = field(default_factory=list)
    queue: deque[HexCoord] = field(default_factory=deque)
    path: Optional[list[HexCoord]] = None
    path_idx: int = 0
    target: Optional[HexCoord] = None
    backtracks: int = 0
    private_map: Optional[ExplorationGraph] = None
    coord: Optional[CollabCoordination] = None

    @property
    def traveling(self) -> bool:
        return self.path is not None


def _first_unvisited_neighbor(agent: ClassicalAgent, gmap: ExplorationGraph, maze: Maze) -> Optional[HexCoord]:
    for di in Direction:
        if maze.has_wall(agent.pos, di):
            continue
        n = neighbor(agent.pos, di, maze.d)
        if not gmap.is_visited(n):
            return n
    return None


def dfs_step(agent: ClassicalAgent, gmap: ExplorationGraph, maze: Maze) -> Move:
    """Go deeper if an open unvisited neighbor exists, else pop the trail."""
    src = agent.pos
    nxt = _first_unvisited_neighbor(agent, gmap, maze)
    if nxt is not None:
        agent.stack.append(src)
        agent.pos = nxt
        gmap.observe_and_visit(maze, nxt)
        return Move(agent.id, src, nxt, EXPLORE)
    if agent.stack:
        back = agent.stack.pop()
        agent.pos = back
        agent.backtracks += 1
        return Move(agent.id, src, back, TRAVEL)
    if gmap.frontier:
        raise InvariantError(f"agent {agent.id}: empty stack with frontier remaining")
    return Move(agent.id, src, src, EXPLORE)


def _advance_travel(
    agent: ClassicalAgent,
    gmap: ExplorationGraph,
    maze: Maze,
    *,
    count_all_hops: bool,
    coord: Optional[CollabCoordination] = None,
) -> Move:
    src = agent.pos
    agent.path_idx += 1
    nxt = agent.path[agent.path_idx]
    entering_new = not gmap.is_visited(nxt)
    agent.pos = nxt
    newly = gmap.observe_and_visit(maze, nxt)
    if coord is not None:
        coord.queue.extend(newly)
    else:
        agent.queue.extend(newly)
    if count_all_hops or not entering_new:
        agent.backtracks += 1
        mode = TRAVEL
    else:
        mode = EXPLORE
    if agent.pos == agent.target:
        if coord is not None:
            coord.claims.pop(agent.target, None)
        agent.path = None
        agent.target = None
    return Move(agent.id, src, nxt, mode)


def bfs_step(agent: ClassicalAgent, gmap: ExplorationGraph, maze: Maze) -> Move:
    """Serve the private frontier queue in discovery order, traveling by A*."""
    if agent.traveling:
        return _advance_travel(agent, gmap, maze, count_all_hops=False)
    target = None
    while agent.queue:
        cand = agent.queue.popleft()
        if not gmap.is_visited(cand):
            target = cand
            break
    if target is None:
        if gmap.frontier:
            raise InvariantError(f"agent {agent.id}: empty queue with frontier remaining")
        return Move(agent.id, agent.pos, agent.pos, EXPLORE)
    agent.path = astar(gmap, agent.pos, target)
    agent.path_idx = 0
    agent.target = target
    return _advance_travel(agent, gmap, maze, count_all_hops=False)


def collab_dfs_step(agent: ClassicalAgent, shared_map: ExplorationGraph, maze: Maze) -> Move:
    """DFS against the shared map; at a branch end relocate to the nearest
    unclaimed frontier, counting every relocation hop as a backtrack."""
    coord = agent.coord
    if agent.traveling:
        if shared_map.is_visited(agent.target):
            coord.claims.pop(agent.target, None)
            agent.path = None
            agent.target = None
        else:
            return _advance_travel(agent, shared_map, maze, count_all_hops=True, coord=coord)
    src = agent.pos
    nxt = _first_unvisited_neighbor(agent, shared_map, maze)
    if nxt is not None:
        agent.pos = nxt
        shared_map.observe_and_visit(maze, nxt)
        return Move(agent.id, src, nxt, EXPLORE)
    others = frozenset(c for c, who in coord.claims.items() if who != agent.id)
    target = nearest_unvisited(shared_map, src, exclude=others, within=reachable_set(shared_map, src))
    if target is None:
        return Move(agent.id, src, src, EXPLORE)
    coord.claims[target] = agent.id
    agent.path = astar(shared_map, src, target)
    agent.path_idx = 0
    agent.target = target
    return _advance_travel(agent, shared_map, maze, count_all_hops=True, coord=coord)


def collab_bfs_step(agent: ClassicalAgent, shared_map: ExplorationGraph, maze: Maze) -> Move:
    """BFS against one shared queue; popping the head is the claim."""
    coord = agent.coord
    if agent.traveling:
        if shared_map.is_visited(agent.target):
            coord.claims.pop(agent.target, None)
            agent.path = None
            agent.target = None
        else:
            return _advance_travel(agent, shared_map, maze, count_all_hops=True, coord=coord)
    component = reachable_set(shared_map, agent.pos)
    target = None
    i = 0
    while i < len(coord.queue):
        cand = coord.queue[i]
        if shared_map.is_visited(cand):
            del coord.queue[i]
            continue
        if cand in component:
            # taking the entry out of the queue is the claim
            del coord.queue[i]
            target = cand
            break
        i += 1  # unreachable from here: leave it for agents of other components
    if target is None:
        reachable_frontier = any(c in component for c in shared_map.frontier)
        if reachable_frontier and not coord.claims:
            raise InvariantError(f"agent {agent.id}: empty shared queue with unclaimed frontier")
        return Move(agent.id, agent.pos, agent.pos, EXPLORE)
    coord.claims[target] = agent.id
    agent.path = astar(shared_map, agent.pos, target)
    agent.path_idx = 0
    agent.target = target
    return _advance_travel(agent, shared_map, maze, count_all_hops=True, coord=coord)


_STEP_FN = {
    "dfs": dfs_step,
    "bfs": bfs_step,
    "cdfs": collab_dfs_step,
    "cbfs": collab_bfs_step,
}


class ClassicalController:
    """Runs one classical policy for all agents of an episode.

    Collaborative policies decide against the world graph itself; plain
    DFS/BFS agents decide against private maps and the controller mirrors
    their moves into the world graph for metrics.
    """

    def __init__(self, method: str, maze: Maze, world: ExplorationGraph):
        if method not in _STEP_FN:
            raise ValueError(f"unknown classical method {method!r}")
        self.method = method
        self.maze = maze
        self.world = world
        self.private = method in ("dfs", "bfs")
        self.agents: list[ClassicalAgent] = []
        self.coord = CollabCoordination() if not self.private else None

    def reset(self, starts: list[HexCoord]) -> None:
        self.agents = []
        for i, start in enumerate(starts):
            agent = ClassicalAgent(id=i, pos=start, coord=self.coord)
            if self.private:
                agent.private_map = ExplorationGraph(self.maze.d)
                agent.queue.extend(agent.private_map.observe_and_visit(self.maze, start))
                self.world.observe_and_visit(self.maze, start)
            else:
                self.coord.queue.extend(self.world.observe_and_visit(self.maze, start))
            self.agents.append(agent)

    def step_all(self) -> list[Move]:
        step_fn = _STEP_FN[self.method]
        moves = []
        for agent in self.agents:
            gmap = agent.private_map if self.private else self.world
            move = step_fn(agent, gmap, self.maze)
            if self.private:
                self.world.observe_and_visit(self.maze, move.dst)
            moves.append(move)
        return moves

    @property
    def backtrack_count(self) -> int:
        return sum(agent.backtracks for agent in self.agents)

"""Game referee for cops and robbers: turn order, legality, capture, transcripts.

The cops place first, then the robber places seeing the cop placement, and
play alternates starting with the cops.  Within a cop turn all cops move
simultaneously (each stays or steps to a neighbor).  Co-location of the robber
with any cop at any moment is a capture.  Bounds throughout the package count
completed cop move-turns.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Protocol, Sequence

from .graph import Graph, bfs_distances, is_connected, parse_graph, serialize_graph


class GameError(ValueError):
    """Illegal game setup or move."""


class Turn(Enum):
    COPS_TO_PLACE = "cops_to_place"
    ROBBER_TO_PLACE = "robber_to_place"
    COPS_TO_MOVE = "cops_to_move"
    ROBBER_TO_MOVE = "robber_to_move"
    CAPTURED = "captured"


@dataclass(frozen=True)
class GameState:
    graph: Graph
    k: int
    cops: tuple[int, ...] | None  # None until placed
    robber: int | None  # None until placed
    turn: Turn
    cop_turns: int  # completed cop move-turns

    @property
    def captured(self) -> bool:
        return self.turn is Turn.CAPTURED


def new_game(G: Graph, k: int) -> GameState:
    if k < 1:
        raise GameError(f"need at least one cop, got k={k}")
    if not is_connected(G):
        raise GameError("pursuit games are played on connected graphs")
    return GameState(G, k, None, None, Turn.COPS_TO_PLACE, 0)


def place_cops(state: GameState, positions: Sequence[int]) -> GameState:
    if state.turn is not Turn.COPS_TO_PLACE:
        raise GameError(f"cops cannot place during {state.turn.value}")
    positions = tuple(positions)
    if len(positions) != state.k:
        raise GameError(f"expected {state.k} cop positions, got {len(positions)}")
    for i, v in enumerate(positions):
        if not (0 <= v < state.graph.n):
            raise GameError(f"cop {i}: placement {v} out of range")
    return replace(state, cops=positions, turn=Turn.ROBBER_TO_PLACE)


def place_robber(state: GameState, v: int) -> GameState:
    if state.turn is not Turn.ROBBER_TO_PLACE:
        raise GameError(f"robber cannot place during {state.turn.value}")
    if not (0 <= v < state.graph.n):
        raise GameError(f"robber: placement {v} out of range")
    assert state.cops is not None
    turn = Turn.CAPTURED if v in state.cops else Turn.COPS_TO_MOVE
    return replace(state, robber=v, turn=turn)


def apply_cop_turn(state: GameState, targets: Sequence[int]) -> GameState:
    """All cops move simultaneously; each target must be in N[current]."""
    if state.turn is not Turn.COPS_TO_MOVE:
        raise GameError(f"cops cannot move during {state.turn.value}")
    assert state.cops is not None and state.robber is not None
    targets = tuple(targets)
    if len(targets) != state.k:
        raise GameError(f"expected {state.k} cop targets, got {len(targets)}")
    G = state.graph
    for i, (src, dst) in enumerate(zip(state.cops, targets)):
        if not (0 <= dst < G.n):
            raise GameError(f"cop {i}: target {dst} out of range")
        if dst != src and dst not in G.neighbor_sets[src]:
            raise GameError(f"cop {i}: target {dst} is not in N[{src}]")
    turn = Turn.CAPTURED if state.robber in targets else Turn.ROBBER_TO_MOVE
    return replace(state, cops=targets, turn=turn, cop_turns=state.cop_turns + 1)


def apply_robber_turn(state: GameState, target: int) -> GameState:
    if state.turn is not Turn.ROBBER_TO_MOVE:
        raise GameError(f"robber cannot move during {state.turn.value}")
    assert state.cops is not None and state.robber is not None
    G = state.graph
    if not (0 <= target < G.n):
        raise GameError(f"robber: target {target} out of range")
    if target != state.robber and target not in G.neighbor_sets[state.robber]:
        raise GameError(f"robber: target {target} is not in N[{state.robber}]")
    turn = Turn.CAPTURED if target in state.cops else Turn.COPS_TO_MOVE
    return replace(state, robber=target, turn=turn)


def legal_robber_targets(state: GameState) -> list[int]:
    if state.turn is Turn.ROBBER_TO_PLACE:
        return list(range(state.graph.n))
    if state.turn is Turn.ROBBER_TO_MOVE:
        assert state.robber is not None
        return sorted(state.graph.closed_sets[state.robber])
    return []


# ---------------------------------------------------------------------------
# Strategy interfaces
# ---------------------------------------------------------------------------

class CopStrategy(Protocol):
    def place(self, G: Graph) -> tuple[int, ...]: ...

    def respond(self, state: GameState) -> tuple[int, ...]: ...


class RobberStrategy(Protocol):
    def place(self, G: Graph, cops: tuple[int, ...]) -> int: ...

    def respond(self, state: GameState) -> int: ...


def _max_distance_vertex(G: Graph, cops: Sequence[int], candidates: Sequence[int]) -> int:
    """Smallest candidate maximizing graph distance to the nearest cop."""
    dist_to_cops = [min(bfs_distances(G, c).get(v, G.n + 1) for c in cops)
                    for v in range(G.n)]
    best = None
    best_v = -1
    for v in sorted(candidates):
        d = dist_to_cops[v]
        if best is None or d > best:
            best, best_v = d, v
    return best_v


class StationaryRobber:
    """Places as far from the cops as possible and never moves."""

    def place(self, G: Graph, cops: tuple[int, ...]) -> int:
        return _max_distance_vertex(G, cops, range(G.n))

    def respond(self, state: GameState) -> int:
        assert state.robber is not None
        return state.robber


class RandomWalkRobber:
    """Uniform random legal move each turn; reproducible for a fixed seed."""

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def place(self, G: Graph, cops: tuple[int, ...]) -> int:
        return self._rng.randrange(G.n)

    def respond(self, state: GameState) -> int:
        assert state.robber is not None
        return self._rng.choice(sorted(state.graph.closed_sets[state.robber]))


class GreedyMaxDistanceRobber:
    """Moves to the closed-neighborhood vertex farthest from the nearest cop,
    smallest index on ties."""

    def place(self, G: Graph, cops: tuple[int, ...]) -> int:
        return _max_distance_vertex(G, cops, range(G.n))

    def respond(self, state: GameState) -> int:
        assert state.robber is not None and state.cops is not None
        return _max_distance_vertex(state.graph, state.cops,
                                    sorted(state.graph.closed_sets[state.robber]))


class GreedyCop:
    """Each cop steps along a shortest path toward the robber; baseline only."""

    def __init__(self, k: int):
        self.k = k

    def place(self, G: Graph) -> tuple[int, ...]:
        return tuple(0 for _ in range(self.k))

    def respond(self, state: GameState) -> tuple[int, ...]:
        assert state.cops is not None and state.robber is not None
        G = state.graph
        dist = bfs_distances(G, state.robber)
        targets = []
        for c in state.cops:
            options = sorted(G.closed_sets[c])
            best = min(options, key=lambda w: (dist.get(w, G.n + 1), w))
            targets.append(best)
        return tuple(targets)


# ---------------------------------------------------------------------------
# Transcripts and matches
# ---------------------------------------------------------------------------

@dataclass
class Transcript:
    """Full record of one match; replaying it reproduces the outcome."""

    graph: Graph
    k: int
    cop_placement: tuple[int, ...]
    robber_placement: int
    turns: list[dict] = field(default_factory=list)  # {"side": ..., "targets"/"target": ...}
    captured: bool = False
    cop_turns: int = 0
    cap_reached: bool = False
    forfeit: str | None = None  # "cops" | "robber" when a strategy misbehaved
    aborted: str | None = None  # e.g. "confinement-violation"

    def to_json(self) -> dict:
        return {
            "graph": json.loads(serialize_graph(self.graph)),
            "k": self.k,
            "placements": {"cops": list(self.cop_placement), "robber": self.robber_placement},
            "turns": self.turns,
            "outcome": {
                "captured": self.captured,
                "cop_turns": self.cop_turns,
                "cap_reached": self.cap_reached,
                "forfeit": self.forfeit,
                "aborted": self.aborted,
            },
        }

    @staticmethod
    def from_json(doc: dict) -> "Transcript":
        G = parse_graph(json.dumps(doc["graph"]))
        t = Transcript(
            graph=G,
            k=doc["k"],
            cop_placement=tuple(doc["placements"]["cops"]),
            robber_placement=doc["placements"]["robber"],
            turns=list(doc["turns"]),
        )
        out = doc["outcome"]
        t.captured = out["captured"]
        t.cop_turns = out["cop_turns"]
        t.cap_reached = out.get("cap_reached", False)
        t.forfeit = out.get("forfeit")
        t.aborted = out.get("aborted")
        return t


def replay(transcript: Transcript) -> GameState:
    """Re-run a transcript through the referee; raises if any recorded move is
    illegal and checks the recorded outcome."""
    state = new_game(transcript.graph, transcript.k)
    state = place_cops(state, transcript.cop_placement)
    state = place_robber(state, transcript.robber_placement)
    for rec in transcript.turns:
        if rec["side"] == "cops":
            state = apply_cop_turn(state, rec["targets"])
        else:
            state = apply_robber_turn(state, rec["target"])
    if state.captured != transcript.captured or state.cop_turns != transcript.cop_turns:
        raise GameError("transcript outcome does not match replayed state")
    return state


def play_match(G: Graph, k: int, cop_strat: CopStrategy, robber_strat: RobberStrategy,
               cap: int) -> Transcript:
    """Run a full match; a strategy emitting an illegal action forfeits."""
    if cap < 1:
        raise GameError(f"move cap must be >= 1, got {cap}")
    state = new_game(G, k)

    placement = cop_strat.place(G)
    state = place_cops(state, placement)
    assert state.cops is not None
    rp = robber_strat.place(G, state.cops)
    state = place_robber(state, rp)
    transcript = Transcript(G, k, state.cops, rp)

    while not state.captured:
        try:
            targets = cop_strat.respond(state)
            state = apply_cop_turn(state, targets)
        except GameError:
            transcript.forfeit = "cops"
            break
        transcript.turns.append({"side": "cops", "targets": list(targets)})
        transcript.cop_turns = state.cop_turns
        if state.captured or state.cop_turns >= cap:
            break
        try:
            target = robber_strat.respond(state)
            state = apply_robber_turn(state, target)
        except GameError:
            transcript.forfeit = "robber"
            break
        transcript.turns.append({"side": "robber", "target": target})

    transcript.captured = state.captured
    transcript.cop_turns = state.cop_turns
    transcript.cap_reached = (not state.captured and transcript.forfeit is None
                              and state.cop_turns >= cap)
    return transcript

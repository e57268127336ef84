"""Gyarfas-path cop strategy for graphs without long holes.

With t >= 4 and a graph containing no hole of length >= t, t-3 cops win:
stack all cops on a start vertex, grow an induced path toward the robber's
component, dropping one cop per new vertex (phase 1), then slide the whole
cop window one step right per turn (phase 2).  The robber stays trapped in a
strictly shrinking component, so capture takes at most |V| cop turns, and at
most z(G) when the start vertex has minimum z.

Each new path vertex is chosen inside the current component (not merely among
the tip's neighbors): the components avoid every earlier closed neighborhood,
which is exactly what keeps the path induced.  Run on a graph that does have
a long hole, the strategy can see the robber escape the component; that
escape move plus the path reconstructs an induced cycle of length >= t, so
the failure is returned as a checkable hole certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .engine import (GameState, RobberStrategy, Transcript, apply_cop_turn,
                     apply_robber_turn, new_game, place_cops, place_robber)
from .graph import Graph, GraphError, component_of, is_connected, is_induced_path, \
    shortest_path_within
from .structure import HoleCertificate, is_induced_cycle, z_of_graph


class V0Rule(Enum):
    FIRST_VERTEX = "first-vertex"
    MIN_Z = "min-z"


class Confinement(Enum):
    OK = "ok"
    ADJACENT_TO_COP = "adjacent_to_cop"
    VIOLATION = "violation"


class ExtensionImpossible(RuntimeError):
    """The robber is outside the current component and no capture is pending;
    the graph must contain a hole of length >= t."""

    def __init__(self, state: "GyarfasState", robber_from: int, robber_to: int):
        self.state = state
        self.robber_from = robber_from
        self.robber_to = robber_to
        super().__init__(
            f"cannot extend: robber moved {robber_from}->{robber_to} outside the component")


class ExtractionError(RuntimeError):
    """Hole extraction produced an invalid cycle; carries the raw cycle."""

    def __init__(self, message: str, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"{message}; raw cycle {self.cycle}")


class StrategyInvariantError(RuntimeError):
    """A GyarfasState invariant failed."""


@dataclass
class GyarfasState:
    """The proof objects: induced path v_0..v_m, nested components C_1..C_m
    (C_0 = V implicitly), stacked cop count on the tip, leftmost occupied
    path index."""

    t: int
    path: list[int]
    comps: list[frozenset] = field(default_factory=list)
    tip_stack: int = 0
    cop_lo: int = 0

    @property
    def k(self) -> int:
        return self.t - 3

    @property
    def m(self) -> int:
        return len(self.path) - 1

    @property
    def phase(self) -> int:
        return 1 if self.tip_stack > 1 else 2

    def component(self, G: Graph) -> frozenset:
        """Current component C_m; C_0 is the whole vertex set."""
        return self.comps[-1] if self.comps else frozenset(range(G.n))

    def occupied(self) -> list[int]:
        return self.path[self.cop_lo:]

    def check_invariants(self, G: Graph, cops: tuple[int, ...] | None = None) -> None:
        t, path, comps = self.t, self.path, self.comps
        m = self.m

        def fail(msg: str) -> None:
            raise StrategyInvariantError(f"{msg} (path={path}, tip={self.tip_stack}, "
                                         f"cop_lo={self.cop_lo})")

        if len(comps) != m:
            fail(f"expected {m} components, have {len(comps)}")
        if not is_induced_path(G, path):
            fail("path is not induced")
        prev = frozenset(range(G.n))
        for i, comp in enumerate(comps, start=1):
            if not comp:
                fail(f"C_{i} is empty")
            if not comp <= prev:
                fail(f"C_{i} is not nested in C_{i - 1}")
            if component_of(G, comp, min(comp)) != comp:
                fail(f"C_{i} is not connected")
            for j in range(i):
                if comp & G.closed_sets[path[j]]:
                    fail(f"C_{i} meets N[v_{j}]")
            if path[i] in comp:
                fail(f"v_{i} lies inside C_{i}")
            if path[i] not in prev:
                fail(f"v_{i} is outside C_{i - 1}")
            if not (G.neighbor_sets[path[i]] & comp):
                fail(f"v_{i} has no neighbor in C_{i}")
            prev = comp
        if self.tip_stack < 1:
            fail("tip stack is empty")
        if self.tip_stack == 1 and self.cop_lo != m - (t - 4):
            fail("phase-2 window misaligned")
        if self.tip_stack > 1 and (self.cop_lo != 0 or self.tip_stack != (t - 3) - m):
            fail("phase-1 stack miscounted")
        if cops is not None:
            expected = list(path[self.cop_lo:m]) + [path[m]] * self.tip_stack
            if sorted(cops) != sorted(expected):
                fail(f"cop occupancy {sorted(cops)} != expected {sorted(expected)}")

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "path": list(self.path),
            "components": [sorted(c) for c in self.comps],
            "tip_stack": self.tip_stack,
            "cop_lo": self.cop_lo,
        }


class GyarfasCopStrategy:
    """CopStrategy controlling t-3 cops along a growing Gyarfas path."""

    def __init__(self, G: Graph, t: int, v0_rule: V0Rule = V0Rule.FIRST_VERTEX):
        if t < 4:
            raise GraphError(f"hole threshold t must be >= 4, got {t}")
        if not is_connected(G):
            raise GraphError("the strategy needs a connected graph")
        self.G = G
        self.t = t
        self.k = t - 3
        self.v0 = 0 if v0_rule is V0Rule.FIRST_VERTEX else z_of_graph(G)[1]
        self.state = GyarfasState(t, [self.v0], [], tip_stack=self.k, cop_lo=0)
        self._pos = [0] * self.k  # path index of each cop
        self.last_robber: int | None = None

    def place(self, G: Graph) -> tuple[int, ...]:
        return tuple(self.v0 for _ in range(self.k))

    def cop_positions(self) -> tuple[int, ...]:
        return tuple(self.state.path[p] for p in self._pos)

    def respond(self, game: GameState) -> tuple[int, ...]:
        assert game.robber is not None and game.cops is not None
        G, st = self.G, self.state
        r = game.robber
        positions = list(game.cops)

        # capture override: adjacency to any cop ends the game this turn
        for i, c in enumerate(positions):
            if r in G.neighbor_sets[c]:
                targets = list(positions)
                targets[i] = r
                self.last_robber = r
                return tuple(targets)

        # extend the path toward the robber's component
        comp = st.component(G)
        vm = st.path[-1]
        if r not in comp or r in G.closed_sets[vm]:
            # r in N[vm] is impossible here (vm is occupied, override fires),
            # so this is a confinement escape.
            raise ExtensionImpossible(st, self.last_robber if self.last_robber is not None else r, r)
        next_comp = component_of(G, comp - G.closed_sets[vm], r)
        candidates = [w for w in sorted(comp & G.neighbor_sets[vm])
                      if G.neighbor_sets[w] & next_comp]
        if not candidates:  # pragma: no cover - component maximality forbids this
            raise StrategyInvariantError(
                f"no attachment candidate for component {sorted(next_comp)}")
        v_next = candidates[0]
        st.path.append(v_next)
        st.comps.append(next_comp)
        m_new = st.m

        if st.tip_stack > 1:
            movers = [i for i in range(self.k) if self._pos[i] == m_new - 1]
            for i in movers[1:]:  # smallest-index tip cop settles down
                self._pos[i] = m_new
            st.tip_stack -= 1
        else:
            for i in range(self.k):
                self._pos[i] += 1
            st.cop_lo += 1
        self.last_robber = r
        return self.cop_positions()


def new_gyarfas(G: Graph, t: int, v0_rule: V0Rule = V0Rule.FIRST_VERTEX) -> GyarfasCopStrategy:
    return GyarfasCopStrategy(G, t, v0_rule)


def confinement_check(G: Graph, state: GyarfasState, robber_from: int,
                      robber_to: int) -> Confinement:
    """Classify a robber move relative to the current component.

    OK: stays inside C_m (or stands still).  ADJACENT_TO_COP: leaves C_m but
    lands next to an occupied vertex, so capture follows next turn.
    VIOLATION: leaves C_m unseen - impossible on graphs without holes >= t.
    """
    comp = state.component(G)
    if robber_to == robber_from or robber_to in comp:
        return Confinement.OK
    for c in state.occupied():
        if robber_to in G.closed_sets[c]:
            return Confinement.ADJACENT_TO_COP
    return Confinement.VIOLATION


def extract_long_hole(G: Graph, state: GyarfasState, r: int, r_escape: int) -> HoleCertificate:
    """Turn a confinement violation into a hole certificate of length >= t.

    The cycle is v_i .. v_m, a shortest v_m-to-r_escape path with interior in
    C_m, and the closing edge r_escape-v_i, where i is the largest index below
    cop_lo with v_i adjacent to the escape vertex.  A shortest path cannot
    carry chords to its endpoints, which is what makes the cycle induced.
    """
    if confinement_check(G, state, r, r_escape) is not Confinement.VIOLATION:
        raise GraphError("extract_long_hole requires a confinement violation")
    path = state.path
    attach = [i for i in range(state.cop_lo)
              if r_escape in G.neighbor_sets[path[i]]]
    if not attach:
        raise ExtractionError("escape vertex sees no vacated path vertex", path)
    i = attach[-1]
    comp = state.component(G)
    P = shortest_path_within(G, comp, path[-1], r_escape)
    if P is None:
        raise ExtractionError("no return path through the component", path)
    cycle = tuple(path[i:]) + P[1:]
    if len(cycle) < state.t or not is_induced_cycle(G, cycle):
        raise ExtractionError(
            f"extracted cycle is not an induced cycle of length >= {state.t}", cycle)
    return HoleCertificate(cycle)


# ---------------------------------------------------------------------------
# Match runner with confinement monitoring
# ---------------------------------------------------------------------------

@dataclass
class PursuitResult:
    transcript: Transcript
    outcome: str  # "captured" | "violation" | "cap_reached"
    cop_turns: int
    certificate: HoleCertificate | None
    confinement_events: list[Confinement]
    diagnostics: list[dict]
    strategy: GyarfasCopStrategy

    @property
    def captured(self) -> bool:
        return self.outcome == "captured"


def pursue(G: Graph, t: int, robber: RobberStrategy, *,
           v0_rule: V0Rule = V0Rule.FIRST_VERTEX, cap: int | None = None,
           validate: bool = False) -> PursuitResult:
    """Play the Gyarfas cops against a robber strategy.

    Every robber move is classified by confinement_check; a VIOLATION aborts
    the match and extracts a hole certificate.  ``validate`` re-checks all
    GyarfasState invariants after every cop turn.
    """
    strat = GyarfasCopStrategy(G, t, v0_rule)
    cap = cap if cap is not None else G.n + t + 2
    state = new_game(G, strat.k)
    state = place_cops(state, strat.place(G))
    assert state.cops is not None
    rp = robber.place(G, state.cops)
    state = place_robber(state, rp)
    transcript = Transcript(G, strat.k, state.cops, rp)
    events: list[Confinement] = []
    diagnostics: list[dict] = []
    certificate = None
    outcome = "captured" if state.captured else None

    while outcome is None:
        targets = strat.respond(state)  # ExtensionImpossible cannot fire:
        state = apply_cop_turn(state, targets)  # violations abort below first
        transcript.turns.append({"side": "cops", "targets": list(targets)})
        diagnostics.append({
            "turn": state.cop_turns,
            "path": list(strat.state.path),
            "tip_stack": strat.state.tip_stack,
            "component_size": len(strat.state.component(G)),
        })
        if validate:
            # the final capture move steps one cop off the path, so occupancy
            # is only meaningful while the game is live
            strat.state.check_invariants(G, None if state.captured else state.cops)
        if state.captured:
            outcome = "captured"
            break
        if state.cop_turns >= cap:
            outcome = "cap_reached"
            break
        move = robber.respond(state)
        prev = state.robber
        assert prev is not None
        state = apply_robber_turn(state, move)
        transcript.turns.append({"side": "robber", "target": move})
        conf = confinement_check(G, strat.state, prev, move)
        events.append(conf)
        if conf is Confinement.VIOLATION:
            certificate = extract_long_hole(G, strat.state, prev, move)
            transcript.aborted = "confinement-violation"
            outcome = "violation"
            break
        if state.captured:
            outcome = "captured"
            break

    transcript.captured = state.captured
    transcript.cop_turns = state.cop_turns
    transcript.cap_reached = outcome == "cap_reached"
    return PursuitResult(transcript, outcome, state.cop_turns, certificate,
                         events, diagnostics, strat)

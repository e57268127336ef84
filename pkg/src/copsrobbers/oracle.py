"""Exact solver for the k-cop pursuit game by backward induction.

States are (cop multiset, robber vertex, side to move); the value of a state
is the number of completed cop move-turns until capture under optimal play
(None / -1 internally when the robber escapes forever):

    V_cm(c, r) = 0 if captured, else 1 + min over cop moves   of V_rm(c', r)
    V_rm(c, r) = 0 if captured, else     max over robber moves of V_cm(c, r')

The sweep runs over the full product space of cop tuples so the min over a
simultaneous cop move factorizes into one closed-neighborhood dilation per
cop axis (the cops all belong to one player, so the product min equals the
sequential min).  Distances come out in waves: states whose threshold set
V <= d first becomes true at wave d have value exactly d.  Cop tuples are
interchangeable, so the public table is keyed by sorted tuples; any
permutation reads the same entry.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .engine import GameState, Turn
from .graph import Graph

DEFAULT_BUDGET = 10_000_000
DEFAULT_DENSE_LIMIT = 60_000_000

_INF = float("inf")


class BudgetExceeded(RuntimeError):
    """The requested game is larger than the configured solve budget."""


def _flat(cops, n: int) -> int:
    idx = 0
    for c in cops:
        idx = idx * n + c
    return idx


@dataclass
class OracleTable:
    """Solved game: exact capture distances for every state.

    ``dist_cm``/``dist_rm`` are (n^k, n) int32 arrays indexed by the flattened
    cop tuple and robber vertex; -1 encodes a robber win.
    """

    graph: Graph
    k: int
    dist_cm: np.ndarray
    dist_rm: np.ndarray

    def distance(self, cops, robber: int, side: Turn) -> int | None:
        """Capture distance in cop turns, or None when the robber escapes."""
        n = self.graph.n
        idx = _flat(cops, n)
        if side is Turn.COPS_TO_MOVE:
            d = int(self.dist_cm[idx, robber])
        elif side is Turn.ROBBER_TO_MOVE:
            d = int(self.dist_rm[idx, robber])
        else:
            raise ValueError(f"no table side for {side}")
        return None if d < 0 else d

    def sorted_configs(self) -> Iterator[tuple[int, ...]]:
        return itertools.combinations_with_replacement(range(self.graph.n), self.k)

    def is_copwin(self) -> bool:
        """True iff some placement wins against every robber placement."""
        return bool((self.dist_cm >= 0).all(axis=1).any())

    def root_value(self) -> int | None:
        """Game value from optimal placement by both sides, None if robber wins."""
        value, _ = self._root()
        return value

    def best_placement(self) -> tuple[int, ...]:
        """Lexicographically smallest optimal cop placement."""
        _, placement = self._root()
        return placement

    def _root(self) -> tuple[int | None, tuple[int, ...]]:
        n = self.graph.n
        best: float = _INF
        best_cfg: tuple[int, ...] | None = None
        win_rows = (self.dist_cm >= 0).all(axis=1)
        row_max = self.dist_cm.max(axis=1)
        for cfg in self.sorted_configs():
            idx = _flat(cfg, n)
            if win_rows[idx] and row_max[idx] < best:
                best = int(row_max[idx])
                best_cfg = cfg
        if best_cfg is None:
            # no winning placement: minimize nothing, fall back to all-zeros
            return None, tuple(0 for _ in range(self.k))
        return int(best), best_cfg

    def dump_json(self, max_states: int = 200_000) -> dict:
        """Regression snapshot keyed by sorted state; guarded by size."""
        from .graph import serialize_graph
        n = self.graph.n
        total = comb(n + self.k - 1, self.k) * n
        if total > max_states:
            raise BudgetExceeded(f"table dump of {total} states exceeds guard {max_states}")
        states = {}
        for cfg in self.sorted_configs():
            idx = _flat(cfg, n)
            for r in range(n):
                key = ",".join(map(str, cfg)) + f"|{r}"
                states[key] = [int(self.dist_cm[idx, r]), int(self.dist_rm[idx, r])]
        return {"graph": json.loads(serialize_graph(self.graph)), "k": self.k,
                "states": states}

    @staticmethod
    def load_json(doc: dict) -> "OracleTable":
        from .graph import parse_graph
        G = parse_graph(json.dumps(doc["graph"]))
        k = doc["k"]
        n = G.n
        dist_cm = np.full((n ** k, n), -1, dtype=np.int32)
        dist_rm = np.full((n ** k, n), -1, dtype=np.int32)
        for key, (cm, rm) in doc["states"].items():
            cfg_text, _, r_text = key.partition("|")
            cfg = tuple(int(x) for x in cfg_text.split(","))
            r = int(r_text)
            for perm in itertools.permutations(cfg):
                dist_cm[_flat(perm, n), r] = cm
                dist_rm[_flat(perm, n), r] = rm
        return OracleTable(G, k, dist_cm, dist_rm)


def state_counts(n: int, k: int) -> tuple[int, int]:
    """(sorted-tuple state count, dense product-space state count)."""
    return comb(n + k - 1, k) * n * 2, (n ** k) * n * 2


def solve(G: Graph, k: int, budget: int = DEFAULT_BUDGET,
          dense_limit: int = DEFAULT_DENSE_LIMIT) -> OracleTable:
    """Least-fixpoint solve of the whole game; deterministic.

    Refuses with the computed state counts when the game exceeds the budget.
    """
    if k < 1:
        raise ValueError(f"need k >= 1 cops, got {k}")
    n = G.n
    sorted_states, dense_states = state_counts(n, k)
    if sorted_states > budget:
        raise BudgetExceeded(
            f"state count {sorted_states} exceeds budget {budget} (n={n}, k={k})")
    if dense_states > dense_limit:
        raise BudgetExceeded(
            f"dense state count {dense_states} exceeds limit {dense_limit} (n={n}, k={k})")

    shape = (n,) * k + (n,)
    captured = np.zeros(shape, dtype=bool)
    rng = np.arange(n)
    robber_axis = [1] * k + [n]
    for i in range(k):
        cop_axis = [1] * (k + 1)
        cop_axis[i] = n
        captured |= rng.reshape(cop_axis) == rng.reshape(robber_axis)

    closed = np.zeros((n, n), dtype=np.float32)
    for v in range(n):
        closed[v, v] = 1.0
        for w in G.adj[v]:
            closed[v, w] = 1.0

    def dilate_cops(B: np.ndarray) -> np.ndarray:
        # OR over every simultaneous cop move = one closed-neighborhood
        # dilation per cop axis
        out = B
        for axis in range(k):
            moved = np.moveaxis(out, axis, 0).reshape(n, -1)
            hit = (closed @ moved.astype(np.float32)) > 0.5
            out = np.moveaxis(hit.reshape((n,) + tuple(s for j, s in enumerate(shape) if j != axis)),
                              0, axis)
        return out

    def erode_robber(B: np.ndarray) -> np.ndarray:
        # AND over the robber's closed neighborhood, via the complement
        flat = (~B).reshape(-1, n).astype(np.float32)
        bad = (flat @ closed) > 0.5  # closed is symmetric
        return (~bad).reshape(shape)

    dist_cm = np.full(shape, -1, dtype=np.int32)
    dist_rm = np.full(shape, -1, dtype=np.int32)
    dist_cm[captured] = 0
    dist_rm[captured] = 0
    C = captured.copy()
    R = captured.copy()
    for d in itertools.count(1):
        CN = captured | dilate_cops(R)
        RN = captured | erode_robber(CN)
        new_c = CN & ~C
        new_r = RN & ~R
        if not new_c.any() and not new_r.any():
            break
        dist_cm[new_c] = d
        dist_rm[new_r] = d
        C, R = CN, RN

    return OracleTable(G, k, dist_cm.reshape(-1, n), dist_rm.reshape(-1, n))


def is_k_copwin(G: Graph, k: int, budget: int = DEFAULT_BUDGET,
                dense_limit: int = DEFAULT_DENSE_LIMIT) -> bool:
    return solve(G, k, budget, dense_limit).is_copwin()


def cop_number(G: Graph, k_max: int, budget: int = DEFAULT_BUDGET,
               dense_limit: int = DEFAULT_DENSE_LIMIT) -> int | None:
    """Smallest k <= k_max with a cop win, None when every k fails."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        if is_k_copwin(G, k, budget, dense_limit):
            return k
    return None


# ---------------------------------------------------------------------------
# Optimal strategies extracted from a table
# ---------------------------------------------------------------------------

def _as_inf(d: int) -> float:
    return _INF if d < 0 else float(d)


class OptimalEvader:
    """Maximizes capture distance (escape preferred); smallest vertex on ties."""

    def __init__(self, G: Graph, k: int, table: OracleTable):
        if table.graph != G or table.k != k:
            raise ValueError("oracle table does not match this game")
        self.table = table

    def place(self, G: Graph, cops: tuple[int, ...]) -> int:
        row = self.table.dist_cm[_flat(cops, G.n)]
        best_v, best = 0, -1.0
        for v in range(G.n):
            d = _as_inf(int(row[v]))
            if d > best:
                best, best_v = d, v
        return best_v

    def respond(self, state: GameState) -> int:
        assert state.cops is not None and state.robber is not None
        G = state.graph
        row = self.table.dist_cm[_flat(state.cops, G.n)]
        best_v, best = state.robber, -1.0
        for v in sorted(G.closed_sets[state.robber]):
            d = _as_inf(int(row[v]))
            if d > best:
                best, best_v = d, v
        return best_v


class OptimalPursuer:
    """Minimizes capture distance; lexicographically smallest target tuple on ties."""

    def __init__(self, G: Graph, k: int, table: OracleTable):
        if table.graph != G or table.k != k:
            raise ValueError("oracle table does not match this game")
        self.k = k
        self.table = table

    def place(self, G: Graph) -> tuple[int, ...]:
        return self.table.best_placement()

    def respond(self, state: GameState) -> tuple[int, ...]:
        assert state.cops is not None and state.robber is not None
        G = state.graph
        n = G.n
        r = state.robber
        best: float = _INF
        best_targets: tuple[int, ...] | None = None
        options = [sorted(G.closed_sets[c]) for c in state.cops]
        for targets in itertools.product(*options):
            d = _as_inf(int(self.table.dist_rm[_flat(targets, n), r]))
            if d < best:
                best, best_targets = d, targets
        assert best_targets is not None
        return best_targets


def optimal_evader(G: Graph, k: int, table: OracleTable) -> OptimalEvader:
    return OptimalEvader(G, k, table)


def optimal_pursuer(G: Graph, k: int, table: OracleTable) -> OptimalPursuer:
    return OptimalPursuer(G, k, table)


# ---------------------------------------------------------------------------
# Self-checks
# ---------------------------------------------------------------------------

def verify_fixpoint(table: OracleTable) -> None:
    """Assert the min/max recurrences at every sorted state; raises on any
    mismatch.  Full sweep: cost grows with (degree+1)^k, keep to small tables."""
    G, k = table.graph, table.k
    n = G.n
    closed_lists = [sorted(G.closed_sets[v]) for v in range(n)]
    for cfg in table.sorted_configs():
        idx = _flat(cfg, n)
        moves = None
        for r in range(n):
            cm = int(table.dist_cm[idx, r])
            rm = int(table.dist_rm[idx, r])
            if r in cfg:
                if cm != 0 or rm != 0:
                    raise AssertionError(f"captured state {cfg},{r} has cm={cm} rm={rm}")
                continue
            if moves is None:
                moves = {_flat(t, n) for t in itertools.product(*(closed_lists[c] for c in cfg))}
            best = min(_as_inf(int(table.dist_rm[m, r])) for m in moves)
            want_cm = _INF if best == _INF else 1 + best
            if _as_inf(cm) != want_cm:
                raise AssertionError(f"cm recurrence fails at {cfg},{r}: {cm} vs {want_cm}")
            worst = max(_as_inf(int(table.dist_cm[idx, v])) for v in closed_lists[r])
            if _as_inf(rm) != worst:
                raise AssertionError(f"rm recurrence fails at {cfg},{r}: {rm} vs {worst}")

"""Independent brute-force oracles used to derive expected test values.

Everything here deliberately avoids the production algorithms: components via
union-find, shortest paths by enumerating all simple paths, holes by checking
every vertex subset for being connected and 2-regular, z-values by post-hoc
inducedness checks over all simple paths, Dilworth numbers over all subsets,
and game values by plain dictionary value iteration.
"""

from __future__ import annotations

import itertools
from math import inf

from copsrobbers.graph import Graph


# --- components via union-find -------------------------------------------

def uf_components(G: Graph, S) -> list[frozenset]:
    S = sorted(set(S))
    parent = {v: v for v in S}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u in S:
        for w in G.adj[u]:
            if w in parent:
                parent[find(u)] = find(w)
    blocks: dict[int, set[int]] = {}
    for v in S:
        blocks.setdefault(find(v), set()).add(v)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


# --- all simple paths -----------------------------------------------------

def all_paths_within(G: Graph, S, src: int, dst: int) -> list[tuple[int, ...]]:
    S = frozenset(S)
    out = []

    def walk(path):
        tip = path[-1]
        if tip == dst:
            out.append(tuple(path))
            return
        for w in G.adj[tip]:
            if w == dst and w not in path:
                walk(path + [w])
            elif w in S and w not in path:
                walk(path + [w])

    walk([src])
    return out


def brute_shortest_within(G: Graph, S, src: int, dst: int) -> tuple[int, ...] | None:
    paths = all_paths_within(G, S, src, dst)
    if not paths:
        return None
    shortest = min(len(p) for p in paths)
    return min(p for p in paths if len(p) == shortest)


# --- holes by subset enumeration -----------------------------------------

def _induces_cycle(G: Graph, subset: tuple[int, ...]) -> bool:
    if len(subset) < 4:
        return False
    inside = set(subset)
    degs = [sum(1 for w in G.adj[v] if w in inside) for v in subset]
    if any(d != 2 for d in degs):
        return False
    # connected and 2-regular == a single cycle
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        u = stack.pop()
        for w in G.adj[u]:
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(subset)


def brute_hole_lengths(G: Graph) -> list[int]:
    lengths = []
    for r in range(4, G.n + 1):
        for subset in itertools.combinations(range(G.n), r):
            if _induces_cycle(G, subset):
                lengths.append(r)
    return lengths


def brute_longest_hole(G: Graph) -> int | None:
    lengths = brute_hole_lengths(G)
    return max(lengths) if lengths else None


# --- z values over all simple paths --------------------------------------

def _is_induced_path(G: Graph, seq) -> bool:
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            adjacent = seq[j] in G.neighbor_sets[seq[i]]
            if (j == i + 1) != adjacent:
                return False
    return True


def brute_z(G: Graph, v: int) -> int:
    best = 0

    def walk(path):
        nonlocal best
        if not _is_induced_path(G, path):
            return  # a chorded prefix stays chorded under extension
        best = max(best, len(path))
        for w in G.adj[path[-1]]:
            if w not in path:
                walk(path + [w])

    walk([v])
    return best


def brute_z_of_graph(G: Graph) -> int:
    return min(brute_z(G, v) for v in range(G.n))


# --- Dilworth over all subsets --------------------------------------------

def brute_dilworth_subsets(G: Graph) -> int:
    def incomparable(u, v):
        Nu, Nv = G.closed_sets[u], G.closed_sets[v]
        return bool(Nu - Nv) and bool(Nv - Nu)

    best = 1
    for r in range(2, G.n + 1):
        found = False
        for subset in itertools.combinations(range(G.n), r):
            if all(incomparable(u, v) for u, v in itertools.combinations(subset, 2)):
                found = True
                break
        if found:
            best = r
        else:
            break
    return best


# --- naive game solvers ----------------------------------------------------

def naive_solve(G: Graph, k: int) -> tuple[dict, dict]:
    """Plain value iteration over sorted cop tuples; returns (dist_cm, dist_rm)
    keyed by (cfg, r) with math.inf for robber wins."""
    n = G.n
    closed = [sorted(G.closed_sets[v]) for v in range(n)]
    configs = list(itertools.combinations_with_replacement(range(n), k))
    dist_cm = {}
    dist_rm = {}
    for cfg in configs:
        for r in range(n):
            captured = r in cfg
            dist_cm[(cfg, r)] = 0 if captured else inf
            dist_rm[(cfg, r)] = 0 if captured else inf
    moves = {cfg: sorted({tuple(sorted(t)) for t in itertools.product(*(closed[c] for c in cfg))})
             for cfg in configs}
    changed = True
    while changed:
        changed = False
        for cfg in configs:
            for r in range(n):
                if r in cfg:
                    continue
                best = min(dist_rm[(mv, r)] for mv in moves[cfg])
                val = best + 1 if best < inf else inf
                if val != dist_cm[(cfg, r)]:
                    dist_cm[(cfg, r)] = val
                    changed = True
                worst = max(dist_cm[(cfg, w)] for w in closed[r])
                if worst != dist_rm[(cfg, r)]:
                    dist_rm[(cfg, r)] = worst
                    changed = True
    return dist_cm, dist_rm


def naive_is_k_copwin_unsorted(G: Graph, k: int) -> bool:
    """Win/loss fixpoint over ORDERED cop tuples (no symmetry reduction)."""
    n = G.n
    closed = [sorted(G.closed_sets[v]) for v in range(n)]
    configs = list(itertools.product(range(n), repeat=k))
    win_cm = {(cfg, r): r in cfg for cfg in configs for r in range(n)}
    win_rm = dict(win_cm)
    moves = {cfg: list(itertools.product(*(closed[c] for c in cfg))) for cfg in configs}
    changed = True
    while changed:
        changed = False
        for cfg in configs:
            for r in range(n):
                if r in cfg:
                    continue
                if not win_cm[(cfg, r)] and any(win_rm[(mv, r)] for mv in moves[cfg]):
                    win_cm[(cfg, r)] = True
                    changed = True
                if not win_rm[(cfg, r)] and all(win_cm[(cfg, w)] for w in closed[r]):
                    win_rm[(cfg, r)] = True
                    changed = True
    return any(all(win_cm[(cfg, r)] for r in range(n)) for cfg in configs)


def naive_is_k_copwin_sorted(G: Graph, k: int) -> bool:
    dist_cm, _ = naive_solve(G, k)
    configs = {cfg for (cfg, _r) in dist_cm}
    return any(all(dist_cm[(cfg, r)] < inf for r in range(G.n)) for cfg in configs)


# --- exhaustive small-graph enumeration ------------------------------------

def all_connected_graphs(n: int):
    """Every labeled connected graph on n vertices (n <= 6 is practical)."""
    from copsrobbers.graph import is_connected
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        G = Graph(n, edges)
        if is_connected(G):
            yield G

"""Structural graph quantities: holes, chordality, z-values, and Dilworth numbers.

A hole is an induced cycle on at least 4 vertices.  z(v) counts the vertices
of a longest induced path starting at v (vertices, not edges, so a single
vertex has z = 1); z(G) is the minimum over all vertices.

The Dilworth number here is the width of the closed-neighborhood containment
preorder u <= v iff N[u] is a subset of N[v].  Two vertices can share a
Dilworth set exactly when each has a closed neighbor the other lacks.  With
closed neighborhoods every cycle C_k (k >= 4) has Dilworth number k, which is
what makes the cop-number inequality c(G) <= D(G) - 2 hold with equality on
C_4.  (The open-neighborhood variant would collapse false twins such as
opposite vertices of C_4 and break that chain.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .graph import Graph, GraphError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Holes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HoleCertificate:
    """An induced cycle, stored in cyclic order.  Length = vertex count >= 4."""

    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def validate(self, G: Graph) -> None:
        if not is_induced_cycle(G, self.cycle):
            raise GraphError(f"certificate cycle {self.cycle} is not an induced cycle")

    def to_json(self) -> dict:
        return {"type": "hole", "cycle": list(self.cycle)}


def is_induced_cycle(G: Graph, seq) -> bool:
    """Independent validator: distinct vertices, >= 4 of them, cyclically
    consecutive pairs adjacent, every other pair non-adjacent."""
    seq = list(seq)
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return False
    if any(not (0 <= v < G.n) for v in seq):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = seq[j] in G.neighbor_sets[seq[i]]
            consecutive = (j == i + 1) or (i == 0 and j == k - 1)
            if consecutive != adjacent:
                return False
    return True


def _hole_search(G: Graph, min_len: int, stop_at_first: bool) -> HoleCertificate | None:
    """Exhaustive induced-path extension search for holes.

    Each hole is found from its smallest vertex s, walking only vertices > s;
    the two traversal directions are deduplicated by requiring second < last.
    """
    n = G.n
    adj = G.masks
    best: tuple[int, ...] | None = None

    for s in range(n):
        low_mask = (1 << (s + 1)) - 1
        start_cand = adj[s] & ~low_mask
        # path = [s, p1, ..., tip]; blocked = neighbors of internal vertices p1..tip-1
        stack: list[tuple[tuple[int, ...], int, int]] = []
        for p1 in _bits(start_cand):
            stack.append(((s, p1), 0, 1 << p1))
        while stack:
            path, blocked, used = stack.pop()
            tip = path[-1]
            cand = adj[tip] & ~blocked & ~used & ~low_mask
            closers = cand & adj[s]
            extenders = cand & ~adj[s]
            if len(path) >= 3:
                for w in _bits(closers):
                    if path[1] < w:  # canonical direction
                        cycle = path + (w,)
                        if len(cycle) >= min_len:
                            if stop_at_first:
                                return HoleCertificate(cycle)
                            if best is None or len(cycle) > len(best):
                                best = cycle
            new_blocked = blocked | adj[tip]
            for w in _bits(extenders):
                stack.append((path + (w,), new_blocked, used | (1 << w)))
    return HoleCertificate(best) if best is not None else None


def longest_hole(G: Graph) -> HoleCertificate | None:
    """A maximum-length hole with certificate, or None iff the graph is chordal.

    Exhaustive search; intended for graphs up to a few dozen vertices.
    """
    return _hole_search(G, 4, stop_at_first=False)


def has_hole_at_least(G: Graph, t: int) -> HoleCertificate | None:
    """First-found hole of length >= t, or None if there is none."""
    if t < 4:
        raise GraphError(f"hole threshold must be >= 4, got {t}")
    return _hole_search(G, t, stop_at_first=True)


# ---------------------------------------------------------------------------
# Chordality via LexBFS + perfect elimination ordering check
# ---------------------------------------------------------------------------

def lexbfs_order(G: Graph) -> list[int]:
    """Lexicographic BFS visit order, smallest vertex on ties."""
    n = G.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best == -1 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in G.adj[best]:
            if not visited[w]:
                labels[w].append(n - step)
    return order


def is_chordal(G: Graph) -> bool:
    """True iff reversing a LexBFS order is a perfect elimination ordering."""
    if G.n == 0:
        return True
    order = lexbfs_order(G)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in G.adj[v] if pos[w] < pos[v]]
        # neighbors preceding v in LexBFS order must form a clique
        for i in range(len(earlier)):
            for j in range(i + 1, len(earlier)):
                if not G.has_edge(earlier[i], earlier[j]):
                    return False
    return True


# ---------------------------------------------------------------------------
# z-values and P_t-freeness (longest induced paths)
# ---------------------------------------------------------------------------

def _reach_size(adj, start: int, allowed: int) -> int:
    """Vertices reachable from start inside allowed (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v] & allowed
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return bin(seen).count("1")


def z_value(G: Graph, v: int, stop_at: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Vertex count of a longest induced path starting at v, with the
    lexicographically smallest witness among the maxima.

    ``stop_at`` ends the search as soon as a path of that many vertices is
    found (used by the P_t witness search).
    """
    if not (0 <= v < G.n):
        raise GraphError(f"vertex {v} out of range for n={G.n}")
    adj = G.masks
    best_len = 1
    best_path: tuple[int, ...] = (v,)
    full = (1 << G.n) - 1

    def extend(path: list[int], avail: int) -> bool:
        nonlocal best_len, best_path
        tip = path[-1]
        if len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
            if stop_at is not None and best_len >= stop_at:
                return True
        cand = adj[tip] & avail
        if not cand:
            return False
        # bound: even absorbing every vertex reachable from the tip cannot
        # beat the current best -> prune
        if len(path) - 1 + _reach_size(adj, tip, avail) <= best_len:
            return False
        next_avail_base = avail & ~adj[tip]
        for w in sorted(_bits(cand)):
            if extend(path + [w], next_avail_base & ~(1 << w)):
                return True
        return False

    extend([v], full & ~(1 << v))
    return best_len, best_path


def z_of_graph(G: Graph) -> tuple[int, int]:
    """min over v of z(v), with the smallest-index argmin."""
    best = None
    best_v = -1
    for v in range(G.n):
        z, _ = z_value(G, v)
        if best is None or z < best:
            best, best_v = z, v
    if best is None:
        raise GraphError("empty graph has no z value")
    return best, best_v


class PtFreeResult(NamedTuple):
    pt_free: bool
    witness: tuple[int, ...] | None

    def __bool__(self) -> bool:  # truthiness = is P_t-free
        return self.pt_free


def is_pt_free(G: Graph, t: int) -> PtFreeResult:
    """No induced path on t vertices?  Returns a witness path when one exists."""
    if t < 2:
        raise GraphError(f"P_t-freeness needs t >= 2, got {t}")
    for v in range(G.n):
        z, path = z_value(G, v, stop_at=t)
        if z >= t:
            return PtFreeResult(False, path[:t])
    return PtFreeResult(True, None)


# ---------------------------------------------------------------------------
# Dilworth number
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DilworthCertificate:
    """An antichain plus, for every ordered pair (u,v), a witness vertex in
    N[u] that is outside N[v]."""

    antichain: tuple[int, ...]
    witnesses: dict[tuple[int, int], int]

    def validate(self, G: Graph) -> None:
        for u in self.antichain:
            for v in self.antichain:
                if u == v:
                    continue
                w = self.witnesses.get((u, v))
                if w is None:
                    raise GraphError(f"missing witness for pair ({u},{v})")
                if w not in G.closed_sets[u] or w in G.closed_sets[v]:
                    raise GraphError(
                        f"witness {w} for ({u},{v}) is not in N[{u}] \\ N[{v}]")

    def to_json(self) -> dict:
        return {
            "type": "dilworth",
            "antichain": list(self.antichain),
            "witnesses": {f"{u},{v}": w for (u, v), w in self.witnesses.items()},
        }


def vicinal_leq(G: Graph, u: int, v: int) -> bool:
    """Closed-neighborhood containment: N[u] subset of N[v]."""
    return G.closed_masks[u] & ~G.closed_masks[v] == 0


def _incomparable(G: Graph, u: int, v: int) -> bool:
    return not vicinal_leq(G, u, v) and not vicinal_leq(G, v, u)


def _max_matching(nleft: int, adjacency: list[list[int]]) -> list[int]:
    """Simple augmenting-path bipartite matching; returns match_right (len =
    number of right vertices implied by adjacency indices)."""
    nright = nleft  # chain-cover bipartite graph is square
    match_left = [-1] * nleft
    match_right = [-1] * nright

    def augment(u: int, seen: list[bool]) -> bool:
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                if match_right[w] == -1 or augment(match_right[w], seen):
                    match_left[u] = w
                    match_right[w] = u
                    return True
        return False

    for u in range(nleft):
        augment(u, [False] * nright)
    return match_left


def dilworth_number(G: Graph) -> tuple[int, DilworthCertificate]:
    """Width of the vicinal preorder via minimum chain cover.

    Vertices with equal closed neighborhoods condense to one class; the strict
    order between classes is already transitively closed, so Dilworth's
    theorem applies directly: width = #classes - maximum matching.  The
    antichain is read off the matching with Koenig's construction.
    """
    if G.n == 0:
        raise GraphError("empty graph has no Dilworth number")
    # condensation classes of equal closed neighborhoods (true twins)
    class_of_mask: dict[int, int] = {}
    reps: list[int] = []
    for v in range(G.n):
        m = G.closed_masks[v]
        if m not in class_of_mask:
            class_of_mask[m] = len(reps)
            reps.append(v)
    q = len(reps)
    less = [[vicinal_leq(G, reps[i], reps[j]) and not vicinal_leq(G, reps[j], reps[i])
             for j in range(q)] for i in range(q)]
    adjacency = [[j for j in range(q) if less[i][j]] for i in range(q)]
    match_left = _max_matching(q, adjacency)
    match_right = [-1] * q
    for i, j in enumerate(match_left):
        if j != -1:
            match_right[j] = i
    matched = sum(1 for j in match_left if j != -1)

    # Koenig: alternate from unmatched left vertices; antichain = classes with
    # left copy reachable and right copy unreachable.
    reach_left = [False] * q
    reach_right = [False] * q
    stack = [i for i in range(q) if match_left[i] == -1]
    for i in stack:
        reach_left[i] = True
    while stack:
        i = stack.pop()
        for j in adjacency[i]:
            if not reach_right[j]:
                reach_right[j] = True
                i2 = match_right[j]
                if i2 != -1 and not reach_left[i2]:
                    reach_left[i2] = True
                    stack.append(i2)
    antichain = tuple(sorted(reps[i] for i in range(q)
                             if reach_left[i] and not reach_right[i]))
    width = q - matched
    if len(antichain) != width:  # pragma: no cover - Koenig guarantees equality
        raise AssertionError(f"antichain size {len(antichain)} != width {width}")

    witnesses: dict[tuple[int, int], int] = {}
    for u in antichain:
        for v in antichain:
            if u == v:
                continue
            private = G.closed_masks[u] & ~G.closed_masks[v]
            if private == 0:  # pragma: no cover - contradicts incomparability
                raise AssertionError(f"antichain pair ({u},{v}) is comparable")
            witnesses[(u, v)] = (private & -private).bit_length() - 1
    cert = DilworthCertificate(antichain, witnesses)
    cert.validate(G)
    return width, cert


def dilworth_brute(G: Graph, limit: int = 18) -> int:
    """Exhaustive maximum over vertex sets that are pairwise incomparable both
    ways.  Independent of the matching route; guarded to small graphs."""
    if G.n > limit:
        raise GraphError(f"dilworth_brute refuses n={G.n} > {limit}")
    if G.n == 0:
        raise GraphError("empty graph has no Dilworth number")
    # comparability masks: comp[v] = vertices comparable with v (either way)
    comp = [0] * G.n
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if vicinal_leq(G, u, v) or vicinal_leq(G, v, u):
                comp[u] |= 1 << v
                comp[v] |= 1 << u
    best = 0

    def grow(chosen_count: int, cand: int) -> None:
        nonlocal best
        if chosen_count + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, chosen_count)
            return
        v = (cand & -cand).bit_length() - 1
        grow(chosen_count + 1, cand & ~(1 << v) & ~comp[v])  # take v
        grow(chosen_count, cand & ~(1 << v))  # skip v
    grow(0, (1 << G.n) - 1)
    return best

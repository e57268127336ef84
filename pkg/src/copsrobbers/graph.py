"""Immutable simple undirected graphs, component primitives, and generators.

Vertices are dense integers 0..n-1.  Vertex sets are plain frozensets; the
search-heavy modules convert to bitmasks internally.  All tie-breaking is by
smallest vertex index so downstream runs are deterministic.
"""

from __future__ import annotations

import json
import random
from collections import deque
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph construction or use."""


class ParseError(GraphError):
    """Malformed graph text; carries a line number when one is known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is exposed three ways: sorted tuples (``adj``), frozensets
    (``neighbor_sets`` / ``closed_sets``) and bitmasks (``masks`` /
    ``closed_masks``).  They are all views of the same edge set.
    """

    __slots__ = ("n", "adj", "neighbor_sets", "closed_sets", "masks",
                 "closed_masks", "name", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], name: str | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u},{v}): endpoint out of range for n={n}")
            if u == v:
                raise GraphError(f"edge ({u},{v}): self-loops are not allowed")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.name = name
        self.adj = tuple(tuple(sorted(s)) for s in sets)
        self.neighbor_sets = tuple(frozenset(s) for s in sets)
        self.closed_sets = tuple(frozenset(s | {v}) for v, s in enumerate(sets))
        masks = []
        for s in sets:
            m = 0
            for w in s:
                m |= 1 << w
            masks.append(m)
        self.masks = tuple(masks)
        self.closed_masks = tuple(m | (1 << v) for v, m in enumerate(masks))
        self._edge_count = sum(len(s) for s in sets) // 2

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self._edge_count}>"


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    """Build a graph from an edge list; duplicates are merged, self-loops rejected."""
    return Graph(n, edges, name=name)


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    """N[v] = {v} together with v's neighbors."""
    if not (0 <= v < G.n):
        raise GraphError(f"vertex {v} out of range for n={G.n}")
    return G.closed_sets[v]


def component_of(G: Graph, S: Iterable[int], v: int) -> VertexSet:
    """Connected component of the subgraph induced on S that contains v."""
    S = frozenset(S)
    if v not in S:
        raise GraphError(f"vertex {v} is not in the candidate set")
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w in S and w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def components_within(G: Graph, S: Iterable[int]) -> list[VertexSet]:
    """Connected components of the subgraph induced on S, ordered by smallest member."""
    S = frozenset(S)
    out: list[VertexSet] = []
    seen: set[int] = set()
    for v in sorted(S):
        if v in seen:
            continue
        comp = component_of(G, S, v)
        seen |= comp
        out.append(comp)
    return out


def bfs_distances(G: Graph, source: int, within: Iterable[int] | None = None) -> dict[int, int]:
    """BFS distances from source, optionally restricted to an induced vertex set."""
    allowed = frozenset(within) if within is not None else None
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shortest_path_within(G: Graph, S: Iterable[int], src: int, dst: int) -> tuple[int, ...] | None:
    """Minimum-edge path src..dst whose internal vertices all lie in S.

    Endpoints are exempt from the membership restriction.  Among all shortest
    paths the lexicographically smallest vertex sequence is returned; None if
    no such path exists.
    """
    if not (0 <= src < G.n) or not (0 <= dst < G.n):
        raise GraphError("path endpoint out of range")
    if src == dst:
        raise GraphError("path endpoints must differ")
    S = frozenset(S)
    # reverse BFS from dst; expansion is only allowed through S (interior).
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w not in dist and (w in S or w == src):
                dist[w] = dist[u] + 1
                if w != src:
                    queue.append(w)
    if src not in dist:
        return None
    path = [src]
    cur = src
    while cur != dst:
        step = dist[cur] - 1
        for w in G.adj[cur]:
            if w == dst and step == 0:
                path.append(w)
                cur = w
                break
            if w in S and dist.get(w, -1) == step and w != src:
                path.append(w)
                cur = w
                break
        else:  # pragma: no cover - reconstruction cannot dead-end
            raise AssertionError("shortest path reconstruction failed")
    return tuple(path)


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """True iff seq is an induced path: distinct vertices, consecutive pairs
    adjacent, all other pairs non-adjacent.  A single vertex counts."""
    seq = list(seq)
    if len(seq) == 0:
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(not (0 <= v < G.n) for v in seq):
        return False
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            adjacent = seq[j] in G.neighbor_sets[seq[i]]
            if j == i + 1 and not adjacent:
                return False
            if j > i + 1 and adjacent:
                return False
    return True


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    return len(component_of(G, range(G.n), 0)) == G.n


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def _cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)], name=f"cycle-{k}")


def _path(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)], name=f"path-{k}")


def _grid(r: int, c: int) -> Graph:
    if r < 1 or c < 1:
        raise GraphError(f"grid needs r,c >= 1, got ({r},{c})")
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return Graph(r * c, edges, name=f"grid-{r}x{c}")


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges, name="petersen")


def _complete(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"complete needs k >= 1, got {k}")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)], name=f"complete-{k}")


def _threshold(creation: str | Sequence[str]) -> Graph:
    """Threshold graph from a creation sequence over {'i','d'}.

    Vertex 0 is the seed; each later character adds an isolated ('i') or
    dominating ('d') vertex.  The result must come out connected, which for
    n >= 2 forces the final character to be 'd'.
    """
    ops = list(creation)
    if not ops:
        raise GraphError("threshold creation sequence must be nonempty")
    if any(op not in ("i", "d") for op in ops):
        raise GraphError(f"threshold creation sequence may only contain 'i'/'d': {creation!r}")
    n = len(ops)
    edges = []
    for v in range(1, n):
        if ops[v] == "d":
            edges.extend((u, v) for u in range(v))
    if n >= 2 and ops[-1] != "d":
        raise GraphError("threshold creation sequence must end with 'd' to be connected")
    return Graph(n, edges, name=f"threshold-{''.join(ops)}")


def _random_connected(n: int, p: float, rng: random.Random, max_tries: int = 100000) -> Graph:
    if n < 1:
        raise GraphError(f"random_connected needs n >= 1, got {n}")
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"edge probability must be in [0,1], got {p}")
    for _ in range(max_tries):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        G = Graph(n, edges)
        if is_connected(G):
            return G
    raise GraphError(f"no connected sample after {max_tries} tries (n={n}, p={p})")


def _random_chordal(n: int, max_clique: int, rng: random.Random) -> Graph:
    """Chordal-by-construction: grow a tree of cliques one vertex at a time.

    Every new vertex attaches to a clique subset of an existing clique, so
    every cycle through it has a chord.
    """
    if n < 1:
        raise GraphError(f"random_chordal needs n >= 1, got {n}")
    if max_clique < 2:
        raise GraphError(f"random_chordal needs max_clique >= 2, got {max_clique}")
    edges: list[tuple[int, int]] = []
    cliques: list[tuple[int, ...]] = [(0,)]
    for v in range(1, n):
        base = cliques[rng.randrange(len(cliques))]
        size = rng.randint(1, min(len(base), max_clique - 1))
        attach = sorted(rng.sample(base, size))
        edges.extend((u, v) for u in attach)
        cliques.append(tuple(attach) + (v,))
    return Graph(n, edges)


GENERATOR_KINDS = ("cycle", "path", "grid", "petersen", "complete", "threshold",
                   "random_connected", "random_chordal")


def generate(kind: str, params: dict | None = None, seed: int = 0) -> Graph:
    """Deterministic graph generator; identical (kind, params, seed) gives
    identical edge sets.  All kinds produce connected graphs."""
    params = dict(params or {})
    rng = random.Random(seed)
    try:
        if kind == "cycle":
            G = _cycle(int(params.pop("k")))
        elif kind == "path":
            G = _path(int(params.pop("k")))
        elif kind == "grid":
            G = _grid(int(params.pop("r")), int(params.pop("c")))
        elif kind == "petersen":
            G = _petersen()
        elif kind == "complete":
            G = _complete(int(params.pop("k")))
        elif kind == "threshold":
            G = _threshold(params.pop("creation"))
        elif kind == "random_connected":
            G = _random_connected(int(params.pop("n")), float(params.pop("p")), rng)
            G.name = f"random_connected-{G.n}-s{seed}"
        elif kind == "random_chordal":
            G = _random_chordal(int(params.pop("n")), int(params.pop("max_clique")), rng)
            G.name = f"random_chordal-{G.n}-s{seed}"
        else:
            raise GraphError(f"unknown generator kind {kind!r}; known: {GENERATOR_KINDS}")
    except KeyError as exc:
        raise GraphError(f"generator {kind!r} is missing parameter {exc}") from None
    if params:
        raise GraphError(f"generator {kind!r} got unexpected parameters {sorted(params)}")
    return G


# ---------------------------------------------------------------------------
# Serialization: {"name": optional, "n": int, "edges": [[u,v], ...]}
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format; raises ParseError with a location."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if "n" not in doc or not isinstance(doc["n"], int) or isinstance(doc["n"], bool):
        raise ParseError("field 'n' must be an integer")
    n = doc["n"]
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("field 'edges' must be a list of pairs")
    edges = []
    for i, item in enumerate(raw_edges):
        if (not isinstance(item, list)) or len(item) != 2 or \
                not all(isinstance(x, int) and not isinstance(x, bool) for x in item):
            raise ParseError(f"edges[{i}]: expected a pair of integers, got {item!r}")
        u, v = item
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"edges[{i}]: endpoint {max(u, v)} >= n={n}" if max(u, v) >= n
                             else f"edges[{i}]: negative endpoint {min(u, v)}")
        if u == v:
            raise ParseError(f"edges[{i}]: self-loop at {u}")
        edges.append((u, v))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("field 'name' must be a string when present")
    return Graph(n, edges, name=name)


def serialize_graph(G: Graph) -> str:
    """Emit the JSON graph format; edges sorted, duplicates never emitted."""
    doc: dict = {}
    if G.name is not None:
        doc["name"] = G.name
    doc["n"] = G.n
    doc["edges"] = [[u, v] for u, v in G.edges()]
    return json.dumps(doc)

"""Undirected simple graphs on dense vertex ids with bitset adjacency."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

UNREACHABLE = -1
MAX_VERTICES = 4096


class GraphError(ValueError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; ``adj[v]`` is an int bitset of neighbours."""

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError("adjacency must have one bitset per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        if labels is not None and len(labels) != n:
            raise GraphError("need one label per vertex")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else tuple(str(v) for v in range(n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def from_matrix(cls, mat: np.ndarray, labels: Sequence[str] | None = None) -> "Graph":
        """Build from a symmetric boolean matrix with a false diagonal."""
        mat = np.asarray(mat, dtype=bool)
        n = mat.shape[0]
        packed = np.packbits(mat, axis=1, bitorder="little")
        adj = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return cls(n, adj, labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    @cached_property
    def distances(self) -> np.ndarray:
        d = all_pairs_distances(self)
        d.setflags(write=False)
        return d

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


# -- distances and invariants -----------------------------------------------

def all_pairs_distances(G: Graph) -> np.ndarray:
    """BFS from every vertex; ``UNREACHABLE`` marks missing paths."""
    n = G.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = 1 << s
        level = 0
        while frontier:
            for v in _bits(frontier):
                dist[s, v] = level
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            level += 1
    return dist


def is_connected(G: Graph) -> bool:
    return G.n == 0 or bool((G.distances[0] != UNREACHABLE).all())


def diameter(G: Graph) -> int:
    """Largest distance; ``UNREACHABLE`` if disconnected, 0 for one vertex."""
    if G.n == 0:
        raise GraphError("diameter of the empty graph is not defined")
    d = G.distances
    if (d == UNREACHABLE).any():
        return UNREACHABLE
    return int(d.max())


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from each root; a non-tree edge (u, w) closes a cycle through the root
    of length at most dist(u) + dist(w) + 1, with equality for some root on a
    shortest cycle.
    """
    best = None
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            for w in _bits(G.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def degree_sequence(G: Graph) -> list[int]:
    return sorted((G.degree(v) for v in range(G.n)), reverse=True)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("empty graph has no minimum degree")
    return min(G.degree(v) for v in range(G.n))


def has_degree_one_vertex(G: Graph) -> bool:
    return any(G.degree(v) == 1 for v in range(G.n))


def cut_vertices(G: Graph) -> set[int]:
    """Articulation points (iterative Hopcroft-Tarjan low-link)."""
    disc = [-1] * G.n
    low = [0] * G.n
    cuts: set[int] = set()
    timer = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent == -1:
                    continue
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def twin_classes(G: Graph) -> list[list[int]]:
    """Partition into distance-similar classes.

    u ~ v iff d(u, x) = d(v, x) for every x outside {u, v}.  Classes are
    listed by smallest member, members ascending.
    """
    d = G.distances
    n = G.n
    classes: list[list[int]] = []
    for v in range(n):
        for cls in classes:
            u = cls[0]
            mask = np.ones(n, dtype=bool)
            mask[[u, v]] = False
            if np.array_equal(d[u][mask], d[v][mask]):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


# -- named families ----------------------------------------------------------

@dataclass(frozen=True)
class FamilyClass:
    kind: str
    params: tuple[int, ...] = ()
    star: bool = False

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        s = f"{self.kind}({','.join(map(str, self.params))})"
        return s + "[star]" if self.star else s


def _bipartition(G: Graph) -> tuple[list[int], list[int]] | None:
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = [s]
        for u in queue:
            for w in _bits(G.adj[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return ([v for v in range(G.n) if colour[v] == 0], [v for v in range(G.n) if colour[v] == 1])


def classify_family(G: Graph) -> FamilyClass:
    """Exact named-family test.

    Overlaps resolve as Path before Cycle before Complete before
    CompleteBipartite, so K_2 is Path(2), K_3 is Cycle(3), K_{2,2} is Cycle(4)
    and K_{1,2} is Path(3).  Bipartite sides are reported smaller first.
    """
    n = G.n
    if n == 0:
        return FamilyClass("Empty")
    if n == 1:
        return FamilyClass("SingleVertex")
    if not is_connected(G):
        return FamilyClass("Other")
    m = G.edge_count
    degs = [G.degree(v) for v in range(n)]
    if m == n - 1 and max(degs) <= 2:
        return FamilyClass("Path", (n,))
    if n >= 3 and all(d == 2 for d in degs):
        return FamilyClass("Cycle", (n,))
    if m == n * (n - 1) // 2:
        return FamilyClass("Complete", (n,))
    parts = _bipartition(G)
    if parts is not None:
        a, b = sorted(len(p) for p in parts)
        if m == a * b:
            return FamilyClass("CompleteBipartite", (a, b), star=(a == 1))
    return FamilyClass("Other")


def family_matches(G: Graph) -> set[str]:
    """Every named family the graph belongs to, ignoring precedence."""
    n = G.n
    out = {classify_family(G).kind}
    if n >= 2 and is_connected(G):
        m = G.edge_count
        if m == n * (n - 1) // 2:
            out.add("Complete")
        parts = _bipartition(G)
        if parts is not None and m == len(parts[0]) * len(parts[1]):
            out.add("CompleteBipartite")
    return out


# -- export / import ---------------------------------------------------------

def export(G: Graph, fmt: str, name: str = "G") -> str:
    fmt = fmt.lower()
    if fmt == "json":
        return json.dumps({"n": G.n, "labels": list(G.labels),
                           "edges": [list(e) for e in G.edges()]}, separators=(", ", ": ")) + "\n"
    if fmt in ("edges", "edge-list", "edgelist"):
        return "".join(f"{G.labels[u]} {G.labels[v]}\n" for u, v in G.edges())
    if fmt == "dot":
        lines = [f"graph {json.dumps(name)} {{"]
        lines += [f"  {v} [label={json.dumps(G.labels[v])}];" for v in range(G.n)]
        lines += [f"  {u} -- {v};" for u, v in G.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise GraphError(f"unknown export format {fmt!r}; use dot, json or edge-list")


def import_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad graph JSON: {exc}") from None
    return Graph.from_edges(n, edges, data.get("labels"))


def import_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; tokens become labels, ids in order of first appearance."""
    index: dict[str, int] = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected two vertex names")
        a, b = (index.setdefault(t, len(index)) for t in toks)
        edges.append((a, b))
    return Graph.from_edges(len(index), edges, list(index))


def random_connected_graph(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random spanning tree on n vertices plus each remaining edge with chance p."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))

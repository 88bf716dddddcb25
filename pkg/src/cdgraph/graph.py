"""Prime graphs and their connectivity.

A :class:`PrimeGraph` is a simple undirected graph whose vertices are prime
numbers.  Graphs are immutable; all operations return new graphs.  Every
iteration order is ascending in the primes so that text output is stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple

from .numtheory import is_prime

__all__ = [
    "ConnectivityReport",
    "PrimeGraph",
    "complete_graph",
    "components",
    "connectivity_degree",
    "connectivity_report",
    "cut_vertices",
    "delete",
    "from_canonical",
    "induced",
    "is_clique",
    "is_complete_vertex",
    "is_connected",
    "join",
    "to_canonical",
    "to_dot",
]

Edge = tuple[int, int]


def _edge(p: int, q: int) -> Edge:
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True)
class PrimeGraph:
    """Simple undirected graph on a finite set of primes.

    Edges may be given as any 2-element iterables; they are normalised to
    ordered pairs ``(p, q)`` with ``p < q``.
    """

    vertices: frozenset[int] = frozenset()
    edges: frozenset[Edge] = field(default=frozenset())

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        verts = frozenset(vertices)
        for v in verts:
            if not is_prime(v):
                raise ValueError(f"vertex {v} is not a prime")
        norm = set()
        for e in edges:
            p, q = tuple(e)
            if p == q:
                raise ValueError(f"self-loop at {p}")
            if p not in verts or q not in verts:
                raise ValueError(f"edge {p}-{q} has an endpoint outside the vertex set")
            norm.add(_edge(p, q))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for p, q in self.edges:
            adj[p].add(q)
            adj[q].add(p)
        return {v: frozenset(adj[v]) for v in sorted(adj)}

    def neighbours(self, v: int) -> frozenset[int]:
        self._require(v)
        return self.adjacency[v]

    def has_edge(self, p: int, q: int) -> bool:
        return _edge(p, q) in self.edges

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def _require(self, v: int) -> None:
        if v not in self.vertices:
            raise KeyError(f"{v} is not a vertex of the graph")

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        verts = " ".join(map(str, self.sorted_vertices()))
        edges = " ".join(f"{p}-{q}" for p, q in self.sorted_edges())
        return f"PrimeGraph(V=[{verts}], E=[{edges}])"


def complete_graph(vertices: Iterable[int]) -> PrimeGraph:
    verts = sorted(set(vertices))
    return PrimeGraph(verts, combinations(verts, 2))


def _components_of(adj: dict[int, frozenset[int]], removed: frozenset[int] = frozenset()) -> list[frozenset[int]]:
    seen = set(removed)
    comps = []
    for start in adj:
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def components(g: PrimeGraph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest prime."""
    return _components_of(g.adjacency)


def is_connected(g: PrimeGraph) -> bool:
    """True for a nonempty graph with a single component."""
    return len(components(g)) == 1


def cut_vertices(g: PrimeGraph) -> frozenset[int]:
    """Vertices whose deletion increases the number of components.

    Uses the low-link depth-first search (iterative), so a vertex of a
    disconnected graph is reported when it separates its own component.
    """
    adj = g.adjacency
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    clock = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, 0, iter(sorted(adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = clock
                    clock += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(sorted(adj[w]))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return frozenset(cuts)


def _k_connected(g: PrimeGraph, k: int) -> bool:
    verts = g.sorted_vertices()
    if len(verts) <= k:
        return False
    adj = g.adjacency
    for size in range(k):
        for removed in combinations(verts, size):
            if len(_components_of(adj, frozenset(removed))) != 1:
                return False
    return True


def connectivity_degree(g: PrimeGraph) -> int:
    """Largest k such that g is k-connected, by exhaustive vertex removal.

    g is k-connected when it has more than k vertices and stays connected
    after deleting any set of fewer than k vertices.  Exponential in |V|;
    intended for graphs with at most a dozen vertices.
    """
    k = 0
    while _k_connected(g, k + 1):
        k += 1
    return k


def complete_vertices(g: PrimeGraph) -> frozenset[int]:
    n = len(g.vertices)
    return frozenset(v for v, nb in g.adjacency.items() if len(nb) == n - 1)


def is_complete_vertex(g: PrimeGraph, v: int) -> bool:
    """True if v is adjacent to every other vertex of g."""
    g._require(v)
    return len(g.adjacency[v]) == len(g.vertices) - 1


def is_clique(g: PrimeGraph, s: Iterable[int]) -> bool:
    """True if every two distinct members of s are adjacent."""
    s = sorted(set(s))
    for v in s:
        g._require(v)
    return all(g.has_edge(p, q) for p, q in combinations(s, 2))


def induced(g: PrimeGraph, s: Iterable[int]) -> PrimeGraph:
    s = frozenset(s)
    missing = s - g.vertices
    if missing:
        raise KeyError(f"not vertices of the graph: {sorted(missing)}")
    return PrimeGraph(s, (e for e in g.edges if e[0] in s and e[1] in s))


def delete(g: PrimeGraph, v: int) -> PrimeGraph:
    g._require(v)
    return induced(g, g.vertices - {v})


def join(g1: PrimeGraph, g2: PrimeGraph) -> PrimeGraph:
    """Disjoint union of g1 and g2 plus every edge between them."""
    overlap = g1.vertices & g2.vertices
    if overlap:
        raise ValueError(f"join needs disjoint vertex sets; shared: {sorted(overlap)}")
    cross = ((p, q) for p in g1.vertices for q in g2.vertices)
    return PrimeGraph(g1.vertices | g2.vertices, [*g1.edges, *g2.edges, *cross])


class ConnectivityReport(NamedTuple):
    components: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    connectivity_degree: int
    complete_vertices: frozenset[int]


def connectivity_report(g: PrimeGraph) -> ConnectivityReport:
    return ConnectivityReport(
        tuple(components(g)),
        cut_vertices(g),
        connectivity_degree(g),
        complete_vertices(g),
    )


def to_canonical(g: PrimeGraph) -> str:
    """Canonical text form: a vertex line, then one ``p q`` line per edge."""
    lines = ["# vertices", " ".join(map(str, g.sorted_vertices())), "# edges"]
    lines += [f"{p} {q}" for p, q in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_canonical(text: str) -> PrimeGraph:
    """Inverse of :func:`to_canonical`."""
    section = None
    verts: list[int] = []
    edges: list[Edge] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line == "# vertices":
            section = "v"
            continue
        if line == "# edges":
            section = "e"
            continue
        if not line:
            continue
        if section == "v":
            verts += [int(x) for x in line.split()]
        elif section == "e":
            p, q = (int(x) for x in line.split())
            edges.append((p, q))
        else:
            raise ValueError(f"unexpected line outside a section: {raw!r}")
    if section is None:
        raise ValueError("missing '# vertices' header")
    return PrimeGraph(verts, edges)


def to_dot(g: PrimeGraph, name: str = "G") -> str:
    """Graphviz DOT text; vertices are labelled by their prime."""
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name)
    lines = [f"graph {safe} {{"]
    lines += [f'  {v} [label="{v}"];' for v in g.sorted_vertices()]
    lines += [f"  {p} -- {q};" for p, q in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"

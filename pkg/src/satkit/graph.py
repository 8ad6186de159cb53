"""Graph structures, search primitives, and DOT export.

Vertices are opaque string labels. :class:`Graph` is undirected with set
semantics on edges, :class:`Digraph` is directed; parallel edges collapse
and self-loops are rejected. The brute-force finders (`find_clique`,
`find_hamiltonian_cycle`, `find_k_coloring`) are desk-scale oracles with
hard size guards and deterministic, first-in-canonical-order results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping

from .errors import BudgetExceededError

Coloring = dict[str, int]


def _check_edges(vertices, pairs) -> None:
    vs = set(vertices)
    if len(vs) != len(tuple(vertices)):
        raise ValueError("duplicate vertex labels")
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop on {u!r}")
        if u not in vs or v not in vs:
            raise ValueError(f"edge ({u!r}, {v!r}) references unknown vertex")


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]  # stored with endpoints sorted

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        norm = frozenset(tuple(sorted(e)) for e in edges)
        _check_edges(vertices, norm)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", norm)

    def has_edge(self, u: str, v: str) -> bool:
        return tuple(sorted((u, v))) in self.edges

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        norm = frozenset(tuple(e) for e in edges)
        _check_edges(vertices, norm)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", norm)

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges

    def successors(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            adj[u].append(v)
        return adj


def strongly_connected_components(
    g: Digraph,
) -> tuple[list[frozenset[str]], dict[str, int]]:
    """Tarjan SCCs plus a topological index map over the condensation.

    Returns ``(components, comp)`` where ``components`` is the partition in
    reverse topological order of the condensation, and ``comp[u] <= comp[v]``
    whenever a path u→v exists (equality exactly within one component).
    """
    adj = g.successors()
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[frozenset[str]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        # Iterative Tarjan: (vertex, iterator position into its successors).
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            succs = adj[v]
            while pi < len(succs):
                w = succs[pi]
                pi += 1
                if w not in index:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                scc = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    scc.append(w)
                    if w == v:
                        break
                components.append(frozenset(scc))
            if work:
                u, _ = work[-1]
                lowlink[u] = min(lowlink[u], lowlink[v])

    last = len(components) - 1
    comp = {v: last - i for i, scc in enumerate(components) for v in scc}
    return components, comp


def is_bipartite(g: Graph) -> Coloring | None:
    """BFS 2-coloring with colors {0, 1}, root of each component colored 0."""
    adj = g.adjacency()
    color: Coloring = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def verify_clique(g: Graph, s: set[str], k: int) -> bool:
    s = set(s)
    if len(s) < k:
        return False
    if not s <= set(g.vertices):
        return False
    return all(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def find_clique(g: Graph, k: int, max_vertices: int = 40) -> set[str] | None:
    """First k-subset (in sorted vertex order) forming a clique, if any."""
    if len(g.vertices) > max_vertices:
        raise BudgetExceededError(
            f"{len(g.vertices)} vertices exceed the clique-search budget of {max_vertices}"
        )
    if k <= 0:
        return set()
    for cand in combinations(sorted(g.vertices), k):
        if all(g.has_edge(u, v) for u, v in combinations(cand, 2)):
            return set(cand)
    return None


def verify_hamiltonian_cycle(g: Digraph, cycle: list[str]) -> bool:
    if len(cycle) != len(g.vertices) or set(cycle) != set(g.vertices):
        return False
    if len(cycle) <= 1:
        return False  # no self-loops, so a single vertex has no cycle
    return all(
        g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )


def iter_hamiltonian_cycles(g: Digraph) -> Iterator[list[str]]:
    """All Hamiltonian cycles anchored at the first vertex, backtracking order.

    Anchoring at one fixed start vertex enumerates each cycle once up to
    rotation (reversals of a directed cycle are distinct cycles).
    """
    n = len(g.vertices)
    if n == 0 or n == 1:
        return
    adj = g.successors()
    start = g.vertices[0]
    path = [start]
    used = {start}

    def extend() -> Iterator[list[str]]:
        if len(path) == n:
            if g.has_edge(path[-1], start):
                yield list(path)
            return
        for w in adj[path[-1]]:
            if w not in used:
                used.add(w)
                path.append(w)
                yield from extend()
                path.pop()
                used.discard(w)

    yield from extend()


def find_hamiltonian_cycle(g: Digraph, max_vertices: int = 32) -> list[str] | None:
    if len(g.vertices) > max_vertices:
        raise BudgetExceededError(
            f"{len(g.vertices)} vertices exceed the cycle-search budget of {max_vertices}"
        )
    for cycle in iter_hamiltonian_cycles(g):
        return cycle
    return None


def verify_coloring(g: Graph, c: Mapping[str, int], k: int) -> bool:
    if set(c) != set(g.vertices):
        return False
    if not all(1 <= c[v] <= k for v in g.vertices):
        return False
    return all(c[u] != c[v] for u, v in g.edges)


def find_k_coloring(g: Graph, k: int, max_vertices: int = 24) -> Coloring | None:
    """First valid k-coloring in vertex order, colors tried ascending."""
    if len(g.vertices) > max_vertices:
        raise BudgetExceededError(
            f"{len(g.vertices)} vertices exceed the coloring-search budget of {max_vertices}"
        )
    adj = g.adjacency()
    order = list(g.vertices)
    color: Coloring = {}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for col in range(1, k + 1):
            if all(color.get(w) != col for w in adj[v]):
                color[v] = col
                if assign(i + 1):
                    return True
                del color[v]
        return False

    return dict(color) if assign(0) else None


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph | Digraph, styling: Mapping[str, Mapping[str, str]] | None = None) -> str:
    """DOT text for the graph; ``styling`` maps labels to attribute dicts."""
    directed = isinstance(g, Digraph)
    lines = ["digraph G {" if directed else "graph G {"]
    styling = styling or {}
    for v in g.vertices:
        attrs = styling.get(v)
        if attrs:
            body = ", ".join(f"{key}={_dot_quote(str(val))}" for key, val in sorted(attrs.items()))
            lines.append(f"  {_dot_quote(v)} [{body}];")
        else:
            lines.append(f"  {_dot_quote(v)};")
    arrow = "->" if directed else "--"
    for u, v in sorted(g.edges):
        lines.append(f"  {_dot_quote(u)} {arrow} {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

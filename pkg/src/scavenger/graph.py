"""Distance graphs, exact graph coloring, and forced-color analysis.

The coloring solver is exact backtracking with saturation-first vertex
selection and new-color symmetry breaking; everything it reports is
re-checkable by the `is_proper` predicate.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .qcore import QPoint3, Rational, _frac, dist_sq


@dataclass(frozen=True)
class AbstractGraph:
    """Simple undirected graph on vertices 0..order-1."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < v < self.order):
                raise ValueError(f"edge ({u},{v}) out of range or misordered for order {self.order}")

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @classmethod
    def from_edges(cls, order: int, pairs) -> AbstractGraph:
        edges = frozenset((min(u, v), max(u, v)) for u, v in pairs if u != v)
        return cls(order, edges)

    @classmethod
    def from_text(cls, text: str) -> AbstractGraph:
        """Edge-list format: one `u v` pair per line, 0-based, # comments."""
        pairs = []
        top = -1
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected two indices, got {raw!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if u < 0 or v < 0 or u == v:
                raise ValueError(f"line {lineno}: bad edge ({u},{v})")
            pairs.append((u, v))
            top = max(top, u, v)
        return cls.from_edges(top + 1, pairs)

    def to_text(self) -> str:
        return "\n".join(f"{u} {v}" for u, v in sorted(self.edges)) + "\n"


@dataclass(frozen=True)
class DistGraph:
    """Euclidean distance graph: exact adjacency at squared distance t."""

    vertices: tuple[QPoint3, ...]
    t: Rational
    edges: frozenset[tuple[int, int]]
    duplicates_merged: int = 0

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(len(self.vertices))]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @property
    def order(self) -> int:
        return len(self.vertices)

    def abstract(self) -> AbstractGraph:
        return AbstractGraph(len(self.vertices), self.edges)


def build_graph(points: list[QPoint3], t: Rational) -> DistGraph:
    """Deduplicate points and compute exact squared-distance-t adjacency."""
    t = _frac(t)
    if t <= 0:
        raise ValueError(f"squared adjacency distance must be positive, got {t}")
    if not points:
        raise ValueError("no points given")
    seen: dict[QPoint3, int] = {}
    vertices: list[QPoint3] = []
    for p in points:
        if p not in seen:
            seen[p] = len(vertices)
            vertices.append(p)
    duplicates = len(points) - len(vertices)
    edges = set()
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if dist_sq(vertices[i], vertices[j]) == t:
                edges.add((i, j))
    return DistGraph(tuple(vertices), t, frozenset(edges), duplicates)


# --- exact coloring ---------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, vertex index -> color."""

    assignment: tuple[int, ...]

    def color_count(self) -> int:
        return len(set(self.assignment))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


def _graph_parts(g: DistGraph | AbstractGraph) -> tuple[int, list[set[int]]]:
    if isinstance(g, DistGraph):
        return len(g.vertices), g.adjacency()
    return g.order, g.adjacency()


def is_proper(g: DistGraph | AbstractGraph, coloring: Coloring) -> bool:
    n, _ = _graph_parts(g)
    if len(coloring.assignment) != n:
        return False
    edges = g.edges
    return all(coloring.assignment[u] != coloring.assignment[v] for u, v in edges)


def k_colorable(g: DistGraph | AbstractGraph, k: int) -> Coloring | None:
    """A proper k-coloring, or None when none exists (exact decision).

    Backtracking assigns the most saturated vertex first (ties: degree, then
    lowest index) and never opens color c+1 before colors 0..c are in use.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n, adj = _graph_parts(g)
    if n == 0:
        return Coloring(())
    colors = [-1] * n
    neighbor_colors: list[dict[int, int]] = [{} for _ in range(n)]
    degree = [len(adj[v]) for v in range(n)]

    def pick() -> int | None:
        best_key = None
        best_v = None
        for v in range(n):
            if colors[v] == -1:
                key = (len(neighbor_colors[v]), degree[v], -v)
                if best_key is None or key > best_key:
                    best_key, best_v = key, v
        return best_v

    def solve(max_used: int) -> bool:
        v = pick()
        if v is None:
            return True
        blocked = neighbor_colors[v]
        if len(blocked) >= k:
            return False
        for c in range(min(k - 1, max_used + 1) + 1):
            if c in blocked:
                continue
            colors[v] = c
            for u in adj[v]:
                nc = neighbor_colors[u]
                nc[c] = nc.get(c, 0) + 1
            if solve(max(max_used, c)):
                return True
            colors[v] = -1
            for u in adj[v]:
                nc = neighbor_colors[u]
                if nc[c] == 1:
                    del nc[c]
                else:
                    nc[c] -= 1
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 1000))
    if solve(-1):
        coloring = Coloring(tuple(colors))
        assert is_proper(g, coloring)
        return coloring
    return None


def chromatic_number(g: DistGraph | AbstractGraph) -> int:
    n, _ = _graph_parts(g)
    if n == 0:
        return 0
    for k in range(1, n + 1):
        if k_colorable(g, k) is not None:
            return k
    raise AssertionError("a graph is always colorable with one color per vertex")


def is_triangle_free(g: DistGraph | AbstractGraph) -> bool:
    _, adj = _graph_parts(g)
    return all(not (adj[u] & adj[v]) for u, v in g.edges)


# --- criticality ---------------------------------------------------------------------


def _induced_abstract(g: AbstractGraph, keep: list[int]) -> AbstractGraph:
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return AbstractGraph.from_edges(len(keep), edges)


def _induced_dist(g: DistGraph, keep: list[int]) -> DistGraph:
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return DistGraph(tuple(g.vertices[v] for v in keep), g.t, edges)


def critical_reduce(g: DistGraph | AbstractGraph, k: int):
    """The vertex-k-critical subgraph reached by greedily deleting vertices
    (ascending index, restarting after each deletion) while the chromatic
    number stays k."""
    n, _ = _graph_parts(g)
    if chromatic_number(g) != k:
        raise ValueError(f"graph is not {k}-chromatic")
    induce = _induced_dist if isinstance(g, DistGraph) else _induced_abstract
    current = g
    while True:
        n, _ = _graph_parts(current)
        for v in range(n):
            keep = [u for u in range(n) if u != v]
            candidate = induce(current, keep)
            if k_colorable(candidate, k - 1) is None:
                current = candidate
                break
        else:
            return current


# --- forced relations under k-coloring --------------------------------------------------


def forced_relations(
    g: AbstractGraph, k: int, max_order: int = 20
) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    """Vertex pairs colored identically in every proper k-coloring, and pairs
    colored differently in every proper k-coloring.

    Complete enumeration up to color permutation (sound for both relations,
    which are permutation-invariant).
    """
    if g.order > max_order:
        raise ValueError(f"order {g.order} exceeds the enumeration bound {max_order}")
    n, adj = g.order, g.adjacency()
    colors = [-1] * n
    always_same = {(u, v): True for u in range(n) for v in range(u + 1, n)}
    always_diff = {(u, v): True for u in range(n) for v in range(u + 1, n)}
    found = [False]

    def record():
        found[0] = True
        for u in range(n):
            for v in range(u + 1, n):
                if colors[u] == colors[v]:
                    always_diff[(u, v)] = False
                else:
                    always_same[(u, v)] = False

    def enumerate_from(v: int, max_used: int):
        if v == n:
            record()
            return
        blocked = {colors[u] for u in adj[v] if colors[u] != -1}
        for c in range(min(k - 1, max_used + 1) + 1):
            if c in blocked:
                continue
            colors[v] = c
            enumerate_from(v + 1, max(max_used, c))
            colors[v] = -1

    enumerate_from(0, -1)
    if not found[0]:
        raise ValueError(f"graph admits no proper {k}-coloring")
    same = {p for p, flag in always_same.items() if flag}
    different = {p for p, flag in always_diff.items() if flag}
    return same, different


# --- the lattice coloring -----------------------------------------------------------


def mod3_color(p) -> int:
    """x + y + z mod 3 for an integer lattice point."""
    if isinstance(p, QPoint3):
        coords = p.coords()
        if any(c.denominator != 1 for c in coords):
            raise ValueError(f"{p} is not a lattice point")
        x, y, z = (int(c) for c in coords)
    else:
        x, y, z = p
    return (x + y + z) % 3


# --- named graphs ---------------------------------------------------------------------

GROTZSCH_LABELS = ("x0", "x1", "x2", "x3", "x4", "y0", "y1", "y2", "y3", "y4", "z")
H_LABELS = ("x0", "x1", "x2", "x3", "x4", "y0", "y1", "y3", "y4", "z")


def grotzsch_graph() -> AbstractGraph:
    """The triangle-free 4-chromatic graph of minimum order (order 11):
    outer 5-cycle x0..x4, inner y_i adjacent to x_{i-1} and x_{i+1}, hub z
    adjacent to every y_i.  Vertex order matches GROTZSCH_LABELS."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, (i + 1) % 5))
        edges.append((10, 5 + i))
    return AbstractGraph.from_edges(11, edges)


def h_graph() -> AbstractGraph:
    """The Grötzsch graph minus y2 (order 10, 17 edges), vertex order
    x0..x4, y0, y1, y3, y4, z as in H_LABELS."""
    y_index = {0: 5, 1: 6, 3: 7, 4: 8}
    z = 9
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
    for i, yi in y_index.items():
        edges.append((yi, (i - 1) % 5))
        edges.append((yi, (i + 1) % 5))
        edges.append((z, yi))
    return AbstractGraph.from_edges(10, edges)

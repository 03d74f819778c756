"""Core graph type, shortest-path machinery and unicyclic structure analysis.

Graphs are finite, undirected and simple, with dense integer vertex labels
0..n-1. Connectivity is not enforced by the type: parsing accepts any simple
graph, and every distance-based operation rejects disconnected input with an
explicit error instead of returning a wrong answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input or a graph that violates an operation's contract."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DisconnectedGraphError(GraphError):
    """A distance-based operation was applied to a disconnected graph."""


class NotUnicyclicError(GraphError):
    """The operation is only defined for connected graphs with one cycle."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable, rejecting loops and duplicates."""
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        neighbours: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} is not allowed")
            if v in neighbours[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            neighbours[u].add(v)
            neighbours[v].add(u)
            m += 1
        return cls(n, tuple(tuple(sorted(s)) for s in neighbours), m)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in descending order."""
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbour sets as bitmasks (bit u of masks[v] set iff uv edge)."""
        masks = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in self.adj[v]:
                m |= 1 << u
            masks[v] = m
        return masks


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts of unordered vertex pairs at each distance k >= 1.

    For a connected graph the counts sum to n(n-1)/2 and counts[1] equals
    the number of edges.
    """

    counts: dict[int, int]
    n: int

    def total_pairs(self) -> int:
        return sum(self.counts.values())

    @property
    def max_distance(self) -> int:
        return max(self.counts) if self.counts else 0

    def get(self, k: int) -> int:
        return self.counts.get(k, 0)


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph, in cyclic vertex order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class MajorVertexReport:
    """Major vertices (degree >= 3) and their terminal end-vertices.

    An end-vertex u is terminal for major vertex v when u is strictly closer
    to v than to every other major vertex.  ``multi_terminal_majors`` holds
    the majors with terminal degree greater than one.
    """

    majors: frozenset[int]
    terminals: dict[int, tuple[int, ...]]
    multi_terminal_majors: frozenset[int]

    def terminal_degree(self, v: int) -> int:
        return len(self.terminals.get(v, ()))


def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented edge-list text into a Graph.

    Each non-comment line is ``u v`` with non-negative integer labels; lines
    starting with ``#`` are comments.  An optional header line ``n <count>``
    fixes the vertex count (needed for isolated high-label vertices);
    otherwise the vertex count is one plus the largest label seen.
    Connectivity is not required here.
    """
    header_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_label = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or header_n is not None:
                raise EdgeListParseError("bad or repeated header, expected 'n <count>'", line_no)
            try:
                header_n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(f"bad vertex count {parts[1]!r}", line_no) from None
            if header_n < 1:
                raise EdgeListParseError(f"vertex count must be >= 1, got {header_n}", line_no)
            continue
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {line!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex label in {line!r}", line_no) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative vertex label in {line!r}", line_no)
        edges.append((u, v))
        max_label = max(max_label, u, v)
    if header_n is None and max_label < 0:
        raise GraphError("empty edge list and no 'n <count>' header")
    n = max_label + 1 if header_n is None else header_n
    if max_label >= n:
        raise GraphError(f"label {max_label} exceeds declared vertex count {n}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list text format accepted by parse_edge_list."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path distances from ``source`` to every vertex.

    Raises DisconnectedGraphError naming an unreachable vertex.
    """
    if not (0 <= source < g.n):
        raise GraphError(f"vertex {source} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(
                f"vertex {v} is unreachable from vertex {source}"
            )
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = 1
    stack = [0]
    masks = g.adjacency_masks()
    while stack:
        x = stack.pop()
        m = masks[x] & ~seen
        while m:
            b = m & -m
            seen |= b
            stack.append(b.bit_length() - 1)
            m ^= b
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    unseen = set(range(g.n))
    out = []
    while unseen:
        root = min(unseen)
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
        unseen -= comp
    return out


def distance_distribution(g: Graph) -> DistanceDistribution:
    """Distance distribution via one BFS per vertex; requires connectivity."""
    counts: dict[int, int] = {}
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for v in range(s + 1, g.n):
            d = dist[v]
            counts[d] = counts.get(d, 0) + 1
    return DistanceDistribution(counts, g.n)


def diameter(g: Graph) -> int:
    """Largest pairwise distance; 0 for the single-vertex graph."""
    return distance_distribution(g).max_distance


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly as many edges as vertices."""
    return g.edge_count == g.n and is_connected(g)


def find_cycle(g: Graph) -> CycleInfo:
    """The unique cycle of a unicyclic graph, by iterative leaf stripping.

    The surviving vertices are returned in cyclic order starting from the
    smallest label, stepping first toward its smaller surviving neighbour.
    """
    if not is_unicyclic(g):
        raise NotUnicyclicError(
            f"graph with n={g.n}, m={g.edge_count} is not connected-unicyclic"
        )
    deg = [len(a) for a in g.adj]
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    alive = [True] * g.n
    while queue:
        x = queue.popleft()
        alive[x] = False
        for y in g.adj[x]:
            if alive[y]:
                deg[y] -= 1
                if deg[y] == 1:
                    queue.append(y)
    survivors = [v for v in range(g.n) if alive[v]]
    start = survivors[0]
    nbrs = [y for y in g.adj[start] if alive[y]]
    order = [start, min(nbrs)]
    while len(order) < len(survivors):
        prev, cur = order[-2], order[-1]
        nxt = [y for y in g.adj[cur] if alive[y] and y != prev]
        order.append(nxt[0])
    return CycleInfo(tuple(order))


def major_vertex_report(g: Graph) -> MajorVertexReport:
    """Classify major vertices and their terminal end-vertices."""
    majors = sorted(v for v in range(g.n) if len(g.adj[v]) >= 3)
    leaves = [v for v in range(g.n) if len(g.adj[v]) == 1]
    terminals: dict[int, list[int]] = {v: [] for v in majors}
    if majors:
        dist_to_major = {w: bfs_distances(g, w) for w in majors}
        for u in leaves:
            best = min(majors, key=lambda w: dist_to_major[w][u])
            d_best = dist_to_major[best][u]
            # strict closeness required: a tie disqualifies u everywhere
            if all(dist_to_major[w][u] > d_best for w in majors if w != best):
                terminals[best].append(u)
    multi = frozenset(v for v, ts in terminals.items() if len(ts) > 1)
    return MajorVertexReport(
        frozenset(majors),
        {v: tuple(ts) for v, ts in terminals.items()},
        multi,
    )


def tail_decomposition(g: Graph, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split a unicyclic graph at ``v`` into cycle side and tail side.

    Returns ``(cycle_side, tail_side)``: ``cycle_side`` is the component of
    the graph minus ``v`` that meets the cycle, and ``tail_side`` is its
    complement, a tree containing ``v`` (possibly just ``{v}``).
    """
    cycle = set(find_cycle(g).vertices)
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    cycle_rest = cycle - {v}
    # flood from the remaining cycle vertices without crossing v
    root = min(cycle_rest)
    comp = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y != v and y not in comp:
                comp.add(y)
                stack.append(y)
    cycle_side = frozenset(comp)
    tail_side = frozenset(set(range(g.n)) - comp)
    return cycle_side, tail_side


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """New graph with vertex v renamed to perm[v]; perm must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))

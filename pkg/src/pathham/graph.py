"""Bitset graph representation and structural predicates.

A graph on ``n <= 64`` vertices stores one integer per vertex whose set bits
are that vertex's neighbours.  Vertex sets are plain integer bitmasks.
Paths and cycles are tuples of vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64

Path = tuple[int, ...]
Cycle = tuple[int, ...]


def vset(vertices: Iterable[int]) -> int:
    """Bitmask of an iterable of vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertex ids in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adj[i]`` is the neighbour bitmask of vertex ``i``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour bit >= n")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in members(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(self.n) for i in members(self.adj[j] & ((1 << j) - 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``perm[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            rows[i] = vset(pos[w] for w in members(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return popcount(g.adj[v])


def is_k_regular(g: Graph, k: int) -> bool:
    return all(popcount(r) == k for r in g.adj)


def reach(g: Graph, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _connected_within(g: Graph, allowed: int) -> bool:
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reach(g, start, allowed) == allowed


def is_connected(g: Graph) -> bool:
    return _connected_within(g, g.full)


def is_2_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    full = g.full
    return all(_connected_within(g, full & ~(1 << v)) for v in range(g.n))


def is_cut_set(g: Graph, s: int | Iterable[int]) -> bool:
    """Whether deleting the vertex set ``s`` disconnects ``g``.

    A single surviving vertex counts as connected.
    """
    mask = s if isinstance(s, int) else vset(s)
    if mask & ~g.full:
        raise ValueError("vertex set is not a subset of V(g)")
    if mask == g.full:
        raise ValueError("cannot remove the whole vertex set")
    return not _connected_within(g, g.full & ~mask)


def remove_vertices(g: Graph, s: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V(g) - s`` relabelled 0.. in increasing order.

    Returns the subgraph and the map old id -> new id.
    """
    mask = s if isinstance(s, int) else vset(s)
    if mask & ~g.full:
        raise ValueError("vertex set is not a subset of V(g)")
    keep = members(g.full & ~mask)
    if not keep:
        raise ValueError("removal leaves no vertices")
    relabel = {v: i for i, v in enumerate(keep)}
    rows = tuple(vset(relabel[w] for w in members(g.adj[v] & ~mask)) for v in keep)
    return Graph(len(keep), rows), relabel


# --- paths and cycles --------------------------------------------------------

def is_path(g: Graph, p: Sequence[int]) -> bool:
    if not p or len(set(p)) != len(p):
        return False
    if any(not 0 <= v < g.n for v in p):
        return False
    return all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def is_cycle(g: Graph, c: Sequence[int]) -> bool:
    return len(c) >= 3 and is_path(g, c) and g.has_edge(c[-1], c[0])


def is_hamiltonian_cycle(g: Graph, c: Sequence[int]) -> bool:
    return len(c) == g.n and is_cycle(g, c)


def canonical_path(p: Sequence[int]) -> Path:
    p = tuple(p)
    return p if p[0] <= p[-1] else p[::-1]


def canonical_cycle(c: Sequence[int]) -> Cycle:
    """Rotate to start at the minimum vertex; orient so ``c[1] < c[-1]``."""
    c = tuple(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[-1]:
        c = (c[0],) + c[:0:-1]
    return c


def cycle_contains_path(c: Sequence[int], p: Sequence[int]) -> bool:
    """Whether every edge of ``p`` is an edge of the cycle ``c``."""
    pos = {v: i for i, v in enumerate(c)}
    m = len(c)
    for a, b in zip(p, p[1:]):
        if a not in pos or b not in pos:
            return False
        if (pos[a] - pos[b]) % m not in (1, m - 1):
            return False
    return True


def paths_of_length(g: Graph, length: int) -> list[Path]:
    """All reversal-normalized paths with ``length`` edges, sorted."""
    if length < 1:
        raise ValueError("path length must be at least 1")
    out = []

    def grow(path: list[int], used: int):
        if len(path) == length + 1:
            if path[0] < path[-1]:
                out.append(tuple(path))
            return
        for w in members(g.adj[path[-1]] & ~used):
            path.append(w)
            grow(path, used | 1 << w)
            path.pop()

    for v in range(g.n):
        grow([v], 1 << v)
    out.sort()
    return out


# --- named graphs ------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(m: int = 3) -> Graph:
    """Circular ladder C_m x K_2."""
    edges = []
    for i in range(m):
        edges += [(i, (i + 1) % m), (m + i, m + (i + 1) % m), (i, m + i)]
    return Graph.from_edges(2 * m, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)

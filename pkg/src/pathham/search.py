"""Hamiltonian cycle search, forced-path search and the exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .graph import (
    Cycle,
    Graph,
    Path,
    canonical_cycle,
    canonical_path,
    cycle_contains_path,
    is_hamiltonian_cycle,
    is_path,
    members,
    paths_of_length,
)

ORACLE_MAX_VERTICES = 16


class SearchError(RuntimeError):
    """A solver produced a cycle that fails re-verification."""


def _checked(g: Graph, order: list[int] | None, p: Sequence[int] = ()) -> Cycle | None:
    if order is None:
        return None
    if not is_hamiltonian_cycle(g, order) or (p and not cycle_contains_path(order, p)):
        raise SearchError(f"solver returned an invalid cycle {order} for {g!r}")
    return canonical_cycle(order)


def find_hamiltonian_cycle(g: Graph) -> Cycle | None:
    if g.n < 3:
        raise ValueError("a Hamiltonian cycle needs at least 3 vertices")
    return _checked(g, kernels.ham_complete(g.adj, g.n, [0]))


def find_ham_cycle_containing_path(g: Graph, p: Sequence[int]) -> Cycle | None:
    """Hamiltonian cycle traversing the edges of ``p`` consecutively, or None."""
    p = tuple(p)
    if not is_path(g, p):
        raise ValueError(f"{p} is not a path of the graph")
    if not 1 <= len(p) - 1 <= g.n - 2:
        raise ValueError(f"path length {len(p) - 1} outside 1..{g.n - 2}")
    return _checked(g, kernels.ham_complete(g.adj, g.n, list(p)), p)


def enumerate_all_ham_cycles(g: Graph) -> list[Cycle]:
    """Every Hamiltonian cycle, canonical and sorted.

    Plain depth-first search from vertex 0 with no pruning beyond the
    visited set; this is the cross-check for the pruned solver.
    """
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle is limited to n <= {ORACLE_MAX_VERTICES}")
    if n < 3:
        return []
    adj = g.adj
    out: list[Cycle] = []
    path = [0]

    def dfs(v: int, used: int):
        if len(path) == n:
            if adj[v] & 1 and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in members(adj[v] & ~used):
            path.append(w)
            dfs(w, used | 1 << w)
            path.pop()

    dfs(0, 1)
    out.sort()
    return out


def cycle_edge_masks(g: Graph, cycles: Sequence[Cycle]) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Edge-index bitmask per cycle, for fast containment queries."""
    index = {e: i for i, e in enumerate(g.edges())}
    masks = []
    for c in cycles:
        m = 0
        for a, b in zip(c, c[1:] + c[:1]):
            m |= 1 << index[(a, b) if a < b else (b, a)]
        masks.append(m)
    return index, masks


def path_edge_mask(index: dict[tuple[int, int], int], p: Sequence[int]) -> int:
    m = 0
    for a, b in zip(p, p[1:]):
        m |= 1 << index[(a, b) if a < b else (b, a)]
    return m


def is_l_path_hamiltonian(g: Graph, l: int) -> tuple[bool, Path | None]:
    """Whether every path of length 1..l lies in a Hamiltonian cycle.

    On failure the second item is a shortest failing path (least in sorted
    order among those of that length).
    """
    if not 1 <= l <= g.n - 2:
        raise ValueError(f"l must be in 1..{g.n - 2}, got {l}")
    covered: set[Path] = set()
    for length in range(1, l + 1):
        for p in paths_of_length(g, length):
            if p in covered:
                continue
            c = find_ham_cycle_containing_path(g, p)
            if c is None:
                return False, p
            covered.update(subpaths_of_cycle(c, l))
    return True, None


def subpaths_of_cycle(c: Cycle, max_len: int) -> set[Path]:
    """Reversal-normalized paths of length 1..max_len lying on ``c``."""
    m = len(c)
    out = set()
    for length in range(1, min(max_len, m - 2) + 1):
        for i in range(m):
            out.add(canonical_path(c[(i + t) % m] for t in range(length + 1)))
    return out


# --- subdivision construction ------------------------------------------------

@dataclass(frozen=True)
class SubdividedGraph:
    """``g`` with new degree-2 vertices on the two edges of a 2-path.

    ``origin[i]`` is the vertex of the original graph for ``i < n``; the
    two new vertices ``w1 = n`` and ``w2 = n + 1`` map to None.
    """

    g1: Graph
    w1: int
    w2: int
    path: Path
    origin: tuple[int | None, ...]

    def contract(self) -> Graph:
        """Undo the subdivision, recovering the original graph."""
        u, v, z = self.path
        n = self.g1.n - 2
        edges = [(a, b) for a, b in self.g1.edges() if a < n and b < n]
        edges += [(u, v), (v, z)]
        return Graph.from_edges(n, edges)


def build_g1(g: Graph, p: Sequence[int]) -> SubdividedGraph:
    p = tuple(p)
    if len(p) != 3:
        raise ValueError("subdivision needs a path of length 2")
    if not is_path(g, p):
        raise ValueError(f"{p} is not a path of the graph")
    u, v, z = p
    n = g.n
    w1, w2 = n, n + 1
    edges = [e for e in g.edges() if set(e) not in ({u, v}, {v, z})]
    edges += [(u, w1), (w1, v), (v, w2), (w2, z)]
    g1 = Graph.from_edges(n + 2, edges)
    return SubdividedGraph(g1, w1, w2, p, tuple(range(n)) + (None, None))


def ham_cycle_via_subdivision(g: Graph, p: Sequence[int]) -> Cycle | None:
    """Second route for 2-paths: plain Hamiltonicity of the subdivided graph.

    A Hamiltonian cycle of ``g1`` must pass through both degree-2 vertices,
    so dropping them yields a cycle of ``g`` through ``p``.
    """
    sub = build_g1(g, p)
    c = find_hamiltonian_cycle(sub.g1)
    if c is None:
        return None
    order = [x for x in c if x not in (sub.w1, sub.w2)]
    return _checked(g, order, p)

"""Isomorph-free generation of small graphs.

The canonical labelling of a graph is the one minimizing its upper-triangle
bit string read column by column, ``(0,1), (0,2), (1,2), (0,3), ...``.
That is also graph6 bit order, so the canonical form is stored as the graph6
line of the canonically relabelled graph.

Because a column-order string of an induced prefix is a prefix of the full
string, every induced prefix ``G[0..m-1]`` of a canonical graph is itself
canonical.  Orderly generation relies on this: add one vertex at a time and
keep an extension only if it is canonical, so each class appears once.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import kernels
from .graph import Graph, is_2_connected, is_connected
from .graph6 import emit_graph6, parse_graph6, write_graph6_file

CANON_MAX_VERTICES = 12
ENUM_MAX_VERTICES = 12
NAIVE_MAX_VERTICES = 8


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes

    def graph(self) -> Graph:
        return parse_graph6(self.data)

    def __str__(self):
        return self.data.decode("ascii")


def canonical_labelling(g: Graph) -> list[int]:
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(f"canonical form is limited to n <= {CANON_MAX_VERTICES}")
    return kernels.canonical_perm(g.adj, g.n)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(emit_graph6(g.relabel(canonical_labelling(g))))


def is_canonical(g: Graph) -> bool:
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(f"canonical form is limited to n <= {CANON_MAX_VERTICES}")
    return kernels.is_canonical(g.adj, g.n)


# --- orderly generation ------------------------------------------------------

Rows = tuple[int, ...]
ColumnFn = Callable[[Rows, int], Iterable[int]]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _extend(parent: Rows, columns: ColumnFn) -> list[Rows]:
    m = len(parent)
    out = []
    for col in columns(parent, m):
        rows = [r | ((col >> i & 1) << m) for i, r in enumerate(parent)]
        rows.append(col)
        if kernels.is_canonical(rows, m + 1):
            out.append(tuple(rows))
    return out


def _regular_columns(n: int, k: int, parent: Rows, m: int) -> Iterable[int]:
    """Neighbour sets for new vertex ``m`` that keep a k-regular completion possible."""
    deg = [_popcount(r) for r in parent]
    after = n - m - 1  # vertices still to come after m
    eligible = [i for i in range(m) if deg[i] < k]
    # vertices that must gain an edge now, since too few remain afterwards
    forced = [i for i in eligible if k - deg[i] > after]
    free = [i for i in eligible if k - deg[i] <= after]
    fmask = sum(1 << i for i in forced)
    deficit = sum(k - d for d in deg)
    for size in range(max(k - after, len(forced)), min(k, len(eligible)) + 1):
        # edges still owed between old and future vertices
        owed = deficit - size + (k - size)
        if not after * (k - after + 1) <= owed <= after * k:
            continue
        for extra in combinations(free, size - len(forced)):
            col = fmask
            for i in extra:
                col |= 1 << i
            yield col


def _all_columns(parent: Rows, m: int) -> Iterable[int]:
    return range(1 << m)


def _orderly(n: int, columns: ColumnFn, workers: int = 1) -> list[Rows]:
    level: list[Rows] = [(0,)]
    for _ in range(1, n):
        if workers > 1 and len(level) > 64:
            chunk = max(1, len(level) // (workers * 8))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(partial(_extend, columns=columns), level, chunksize=chunk))
        else:
            parts = [_extend(p, columns) for p in level]
        level = [rows for part in parts for rows in part]
    return level


def _check_bounds(k: int, n: int) -> None:
    if not 3 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(f"n must be in 3..{ENUM_MAX_VERTICES}, got {n}")
    if not 2 <= k < n:
        raise ValueError(f"k must satisfy 2 <= k < n, got k={k}, n={n}")


def _finish(graphs: Iterable[Graph], require_2_connected: bool) -> list[Graph]:
    if require_2_connected:
        graphs = [g for g in graphs if is_2_connected(g)]
    return sorted(graphs, key=canonical_form)


def enumerate_regular_graphs(k: int, n: int, require_2_connected: bool = False,
                             workers: int = 1) -> list[Graph]:
    """One canonically labelled representative per class of k-regular graphs on n vertices."""
    _check_bounds(k, n)
    if n * k % 2:
        return []
    rows = _orderly(n, partial(_regular_columns, n, k), workers)
    # completions are regular by construction; re-check anyway
    graphs = [Graph(n, r) for r in rows if all(_popcount(x) == k for x in r)]
    return _finish(graphs, require_2_connected)


def enumerate_graphs(n: int, connected: bool = False, workers: int = 1) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism (``n <= 9`` is practical)."""
    if not 1 <= n <= ENUM_MAX_VERTICES:
        raise ValueError(f"n must be in 1..{ENUM_MAX_VERTICES}, got {n}")
    graphs = [Graph(n, r) for r in _orderly(n, _all_columns, workers)]
    if connected:
        graphs = [g for g in graphs if is_connected(g)]
    return sorted(graphs, key=canonical_form)


def naive_regular_graphs(k: int, n: int, require_2_connected: bool = False) -> list[Graph]:
    """Every labelled k-regular graph on n vertices, deduplicated by canonical form.

    Independent of the orderly generator; only for ``n <= 8``.
    """
    _check_bounds(k, n)
    if n > NAIVE_MAX_VERTICES:
        raise ValueError(f"naive enumeration is limited to n <= {NAIVE_MAX_VERTICES}")
    if n * k % 2:
        return []
    deg = [0] * n
    rows = [0] * n
    seen: dict[CanonicalForm, Graph] = {}

    def rec(i: int):
        if i == n:
            g = Graph(n, tuple(rows))
            seen.setdefault(canonical_form(g), g)
            return
        need = k - deg[i]
        cand = [j for j in range(i + 1, n) if deg[j] < k]
        for nbrs in combinations(cand, need):
            for j in nbrs:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                deg[j] += 1
            deg[i] += need
            rec(i + 1)
            deg[i] -= need
            for j in nbrs:
                rows[i] &= ~(1 << j)
                rows[j] &= ~(1 << i)
                deg[j] -= 1

    rec(0)
    graphs = [seen[c].relabel(canonical_labelling(seen[c])) for c in sorted(seen)]
    if require_2_connected:
        graphs = [g for g in graphs if is_2_connected(g)]
    return graphs


def theorem_range(k: int) -> list[int]:
    """Feasible vertex counts in the band ``2k-2 <= n <= 2k+2``."""
    return [n for n in range(2 * k - 2, 2 * k + 3) if k < n and n * k % 2 == 0]


def enumerate_theorem_range(k: int, workers: int = 1) -> list[tuple[int, list[Graph]]]:
    if not 3 <= k <= 5:
        raise ValueError(f"k must be in 3..5, got {k}")
    return [(n, enumerate_regular_graphs(k, n, True, workers)) for n in theorem_range(k)]


# --- corpus files ------------------------------------------------------------

def corpus_filename(k: int, n: int, two_connected: bool) -> str:
    return f"r{k}_n{n}{'_2c' if two_connected else ''}.g6"


def write_corpus(directory: str | os.PathLike, k: int, n: int, two_connected: bool,
                 graphs: Sequence[Graph]) -> str:
    path = os.path.join(directory, corpus_filename(k, n, two_connected))
    write_graph6_file(path, graphs)
    return path

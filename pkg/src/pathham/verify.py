"""Theorem checks over single graphs and corpora.

For a path ``P`` the hypothesis is that deleting ``V(P)`` leaves the graph
connected; the conclusion is that some Hamiltonian cycle contains ``P``.
A conclusion failure is only ever reported after the solver's "no" has been
confirmed by the exhaustive cycle oracle (or, above the oracle's size cap,
by the exact backtracking search itself).
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Iterable, Sequence

from .enumerate import canonical_form, enumerate_regular_graphs
from .graph import (
    Cycle,
    Graph,
    Path,
    cycle_contains_path,
    is_2_connected,
    is_cut_set,
    is_hamiltonian_cycle,
    is_k_regular,
    paths_of_length,
    popcount,
    vset,
)
from .search import (
    ORACLE_MAX_VERTICES,
    SearchError,
    cycle_edge_masks,
    enumerate_all_ham_cycles,
    find_ham_cycle_containing_path,
    is_l_path_hamiltonian,
    path_edge_mask,
    subpaths_of_cycle,
)

ORACLE = "exhaustive-oracle"
EXACT_SEARCH = "exact-search"


class PreconditionError(ValueError):
    """The graph is outside the range a theorem speaks about."""


@dataclass
class LengthCounts:
    paths_total: int = 0
    hypothesis_failures: int = 0
    covered: int = 0
    conclusion_failures: int = 0


@dataclass
class VerificationReport:
    graph_id: str
    n: int
    k: int
    counts: dict[int, LengthCounts] = field(default_factory=dict)
    hypothesis_failures: list[Path] = field(default_factory=list)
    conclusion_failures: list[tuple[Path, str]] = field(default_factory=list)
    witnesses: dict[Path, Cycle] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.conclusion_failures

    def totals(self) -> LengthCounts:
        t = LengthCounts()
        for c in self.counts.values():
            t.paths_total += c.paths_total
            t.hypothesis_failures += c.hypothesis_failures
            t.covered += c.covered
            t.conclusion_failures += c.conclusion_failures
        return t

    def validate(self, g: Graph) -> None:
        """Reconcile counts and re-verify every witness against ``g``."""
        for length, c in self.counts.items():
            if c.paths_total != c.hypothesis_failures + c.covered + c.conclusion_failures:
                raise AssertionError(f"counts do not reconcile for length {length}")
        if len(self.witnesses) != sum(c.covered for c in self.counts.values()):
            raise AssertionError("witness count differs from covered count")
        for p, cyc in self.witnesses.items():
            if not (is_hamiltonian_cycle(g, cyc) and cycle_contains_path(cyc, p)):
                raise AssertionError(f"witness {cyc} does not cover {p}")


class _Oracle:
    """Lazily enumerated Hamiltonian cycles of one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._masks = None

    def covers(self, p: Path) -> bool:
        if self._masks is None:
            index, masks = cycle_edge_masks(self.g, enumerate_all_ham_cycles(self.g))
            self._index, self._masks = index, masks
        pm = path_edge_mask(self._index, p)
        return any(m & pm == pm for m in self._masks)


def certify_uncovered(g: Graph, p: Path, oracle: _Oracle | None = None) -> str:
    """Confirm that no Hamiltonian cycle contains ``p``; return the method used."""
    if g.n > ORACLE_MAX_VERTICES:
        return EXACT_SEARCH
    oracle = oracle or _Oracle(g)
    if oracle.covers(p):
        raise SearchError(f"solver missed a Hamiltonian cycle through {p}")
    return ORACLE


def path_report(g: Graph, k: int, lengths: Sequence[int]) -> VerificationReport:
    """Check every path with the given lengths; assert nothing."""
    rep = VerificationReport(str(canonical_form(g)) if g.n <= 12 else "-", g.n, k)
    oracle = _Oracle(g)
    max_len = max(lengths)
    # cycles found so far, keyed by the paths they cover
    found: dict[Path, Cycle] = {}
    for length in lengths:
        counts = rep.counts.setdefault(length, LengthCounts())
        for p in paths_of_length(g, length):
            counts.paths_total += 1
            if is_cut_set(g, vset(p)):
                counts.hypothesis_failures += 1
                rep.hypothesis_failures.append(p)
                continue
            cyc = found.get(p)
            if cyc is None:
                cyc = find_ham_cycle_containing_path(g, p)
                if cyc is not None:
                    for q in subpaths_of_cycle(cyc, max_len):
                        found.setdefault(q, cyc)
            if cyc is None:
                counts.conclusion_failures += 1
                rep.conclusion_failures.append((p, certify_uncovered(g, p, oracle)))
            else:
                counts.covered += 1
                rep.witnesses[p] = cyc
    rep.validate(g)
    return rep


def _require_theorem_range(g: Graph, k: int, max_n: int) -> None:
    if not is_k_regular(g, k):
        raise PreconditionError(f"graph is not {k}-regular")
    if not is_2_connected(g):
        raise PreconditionError("graph is not 2-connected")
    if g.n > max_n:
        raise PreconditionError(f"n={g.n} exceeds {max_n}")


def verify_theorem2(g: Graph, k: int) -> VerificationReport:
    """2-paths whose vertex set is not a cut-set must lie on a Hamiltonian cycle."""
    _require_theorem_range(g, k, 2 * k)
    return path_report(g, k, (2,))


def verify_theorem3(g: Graph, k: int) -> VerificationReport:
    """Edges whose ends are not a cut-set must lie on a Hamiltonian cycle (n <= 3k-1)."""
    _require_theorem_range(g, k, 3 * k - 1)
    return path_report(g, k, (1,))


@dataclass
class Corollary4Result:
    hypothesis: bool
    conclusion: bool
    failing_path: Path | None
    report: VerificationReport

    @property
    def ok(self) -> bool:
        return not self.hypothesis or self.conclusion


def verify_corollary4(g: Graph, k: int) -> Corollary4Result:
    """If no path of length <= 2 is a cut-set, the graph must be 2-path Hamiltonian."""
    _require_theorem_range(g, k, 2 * k)
    rep = path_report(g, k, (1, 2))
    hypothesis = not rep.hypothesis_failures
    conclusion, failing = is_l_path_hamiltonian(g, 2)
    if hypothesis and conclusion != rep.ok:
        raise SearchError("path report and l-path check disagree")
    return Corollary4Result(hypothesis, conclusion, failing, rep)


def kronk_condition(g: Graph, l: int) -> bool:
    """Degree sum of every non-adjacent pair is at least ``n + l``."""
    if not 1 <= l <= g.n - 2:
        raise ValueError(f"l must be in 1..{g.n - 2}, got {l}")
    deg = [popcount(r) for r in g.adj]
    return all(deg[a] + deg[b] >= g.n + l
               for a, b in combinations(range(g.n), 2) if not g.has_edge(a, b))


# --- sharpness family --------------------------------------------------------

@dataclass(frozen=True)
class SharpnessGraph:
    graph: Graph
    a1: int
    b1: int
    a2: int
    b2: int
    labels: dict[str, int]


def _copy_names(k: int) -> list[str]:
    # internal vertices c, d, e, ... then a, b
    inner = [chr(ord("c") + i) if i < 24 else f"x{i}" for i in range(k - 1)]
    return inner + ["a", "b"]


def sharpness_construct(k: int) -> SharpnessGraph:
    """Two copies of K_{k+1} minus an edge ``a_i b_i``, joined by ``a1a2`` and ``b1b2``.

    Copy ``i`` occupies ids ``(i-1)(k+1) ..``; within a copy the internal
    vertices come first and ``a_i, b_i`` are the last two.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    size = k + 1
    edges = []
    labels = {}
    for copy in (1, 2):
        base = (copy - 1) * size
        a, b = base + k - 1, base + k
        edges += [(base + i, base + j) for i, j in combinations(range(size), 2)
                  if {base + i, base + j} != {a, b}]
        for name, v in zip(_copy_names(k), range(base, base + size)):
            labels[f"{name}{copy}"] = v
    a1, b1, a2, b2 = labels["a1"], labels["b1"], labels["a2"], labels["b2"]
    edges += [(a1, a2), (b1, b2)]
    return SharpnessGraph(Graph.from_edges(2 * size, edges), a1, b1, a2, b2, labels)


def find_uncoverable_paths(g: Graph, l: int) -> list[tuple[Path, bool]]:
    """Paths of length 1..l on no Hamiltonian cycle, each with its cut-set flag.

    Certified against the full list of Hamiltonian cycles.
    """
    if l not in (1, 2):
        raise ValueError("l must be 1 or 2")
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"exhaustive regime is limited to n <= {ORACLE_MAX_VERTICES}")
    if g.n < l + 2:
        raise ValueError(f"graph too small for paths of length {l}")
    index, masks = cycle_edge_masks(g, enumerate_all_ham_cycles(g))
    out = []
    for length in range(1, l + 1):
        for p in paths_of_length(g, length):
            pm = path_edge_mask(index, p)
            if not any(m & pm == pm for m in masks):
                out.append((p, is_cut_set(g, vset(p))))
    return out


# --- corpus sweeps -----------------------------------------------------------

def _map(fn, items: Sequence, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * 4))))
    return [fn(x) for x in items]


def _progress(msg: str, quiet: bool) -> None:
    if not quiet:
        print(msg, file=sys.stderr, flush=True)


def theorem2_suite(k: int, ns: Iterable[int] | None = None, workers: int = 1,
                   quiet: bool = True) -> list[VerificationReport]:
    """Theorem check on every 2-connected k-regular graph with ``n <= 2k``."""
    ns = range(k + 1, 2 * k + 1) if ns is None else ns
    reports = []
    for n in ns:
        if n > 2 * k:
            raise PreconditionError(f"n={n} exceeds 2k={2 * k}")
        corpus = enumerate_regular_graphs(k, n, True, workers)
        _progress(f"k={k} n={n}: {len(corpus)} graphs", quiet)
        reports += _map(partial(verify_theorem2, k=k), corpus, workers)
    return reports


def corollary4_suite(k: int, ns: Iterable[int] | None = None, workers: int = 1,
                     quiet: bool = True) -> list[Corollary4Result]:
    ns = range(k + 1, 2 * k + 1) if ns is None else ns
    results = []
    for n in ns:
        if n > 2 * k:
            raise PreconditionError(f"n={n} exceeds 2k={2 * k}")
        corpus = enumerate_regular_graphs(k, n, True, workers)
        _progress(f"k={k} n={n}: {len(corpus)} graphs", quiet)
        results += _map(partial(verify_corollary4, k=k), corpus, workers)
    return results


@dataclass
class BandRow:
    n: int
    graph_id: str
    paths_total: int
    hypothesis_failures: int
    conclusion_failures: int


def explore_open_band(k: int, workers: int = 1, quiet: bool = True) -> list[BandRow]:
    """Tabulate uncovered non-cut-set 2-paths for ``n = 2k+1`` and ``2k+2``.

    Exploratory output only; nothing here is asserted.
    """
    if not 3 <= k <= 5:
        raise ValueError(f"k must be in 3..5, got {k}")
    rows = []
    for n in (2 * k + 1, 2 * k + 2):
        if n * k % 2:
            continue
        corpus = enumerate_regular_graphs(k, n, True, workers)
        _progress(f"band k={k} n={n}: {len(corpus)} graphs", quiet)
        for rep in _map(partial(path_report, k=k, lengths=(2,)), corpus, workers):
            c = rep.counts[2]
            rows.append(BandRow(n, rep.graph_id, c.paths_total, c.hypothesis_failures,
                                c.conclusion_failures))
    return rows

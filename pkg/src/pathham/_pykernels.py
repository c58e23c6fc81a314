"""Pure-Python search kernels.

Reference implementation of the two hot loops; ``_ckernels.pyx`` mirrors it
step for step so both backends return identical witnesses.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reaches_all(adj: Sequence[int], mask: int) -> bool:
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def ham_complete(adj: Sequence[int], n: int, path: Sequence[int]) -> list[int] | None:
    """Extend ``path`` at both ends to a Hamiltonian cycle, or return None.

    Interior vertices of ``path`` are never touched again, so its edges stay
    consecutive in the result.  The returned order starts with the vertices
    prepended at the head (outermost first), then ``path``, then those
    appended at the tail.
    """
    full = (1 << n) - 1
    left: list[int] = []
    right: list[int] = []
    visited = 0
    for v in path:
        visited |= 1 << v

    def rec(head: int, tail: int, visited: int) -> bool:
        unvisited = full & ~visited
        if not unvisited:
            return head != tail and bool(adj[head] >> tail & 1)
        avail = unvisited | (1 << head) | (1 << tail)
        m = unvisited
        while m:
            low = m & -m
            m ^= low
            if _popcount(adj[low.bit_length() - 1] & avail) < 2:
                return False
        hn = adj[head] & unvisited
        tn = adj[tail] & unvisited
        if not hn or not tn:
            return False
        if not _reaches_all(adj, unvisited):
            return False

        if head == tail:
            at_head = False
            cand = tn
        else:
            hc, tc = _popcount(hn), _popcount(tn)
            at_head = hc < tc or (hc == tc and head < tail)
            cand = hn if at_head else tn
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if at_head:
                left.append(w)
                if rec(w, tail, visited | low):
                    return True
                left.pop()
            else:
                right.append(w)
                if rec(head, w, visited | low):
                    return True
                right.pop()
        return False

    if not path or not rec(path[0], path[-1], visited):
        return None
    return left[::-1] + list(path) + right


def _search_canon(adj: Sequence[int], n: int, best: list[int] | None):
    """Branch-and-bound for the lexicographically least column string.

    Column ``j`` of a labelling is the adjacency of position ``j`` to
    positions ``0..j-1``, read as an integer with position 0 most
    significant.  With ``best`` given, stop at the first labelling strictly
    smaller than it and return ``(None, True)``; otherwise return the optimal
    ``(perm, False)``.
    """
    checking = best is not None
    col = [0] * n
    cur = [0] * n
    placed = [0] * n
    state = {"best": best, "perm": None, "version": 0}

    def rec(j: int, remaining: int, tie_equal: bool) -> bool:
        if j == n:
            if state["best"] is None or not tie_equal:
                state["best"] = cur[:]
                state["perm"] = placed[:]
                state["version"] += 1
            return False
        m = remaining
        lo = None
        while m:
            low = m & -m
            m ^= low
            c = col[low.bit_length() - 1]
            if lo is None or c < lo:
                lo = c
        b = state["best"]
        if b is not None and tie_equal:
            if lo > b[j]:
                return False
            if lo < b[j]:
                if checking:
                    return True
                tie_equal = False
        m = remaining
        cands = 0
        while m:
            low = m & -m
            m ^= low
            if col[low.bit_length() - 1] == lo:
                cands |= low
        while cands:
            low = cands & -cands
            cands ^= low
            v = low.bit_length() - 1
            rest = remaining ^ low
            row = adj[v]
            r = rest
            while r:
                lw = r & -r
                r ^= lw
                w = lw.bit_length() - 1
                col[w] = (col[w] << 1) | (row >> w & 1)
            cur[j] = lo
            placed[j] = v
            version = state["version"]
            if rec(j + 1, rest, tie_equal):
                return True
            r = rest
            while r:
                lw = r & -r
                r ^= lw
                col[lw.bit_length() - 1] >>= 1
            if state["version"] != version:
                tie_equal = True
        return False

    found = rec(0, (1 << n) - 1, True)
    return state["perm"], found


def identity_columns(adj: Sequence[int], n: int) -> list[int]:
    cols = [0] * n
    for j in range(n):
        c = 0
        for i in range(j):
            c = (c << 1) | (adj[j] >> i & 1)
        cols[j] = c
    return cols


def canonical_perm(adj: Sequence[int], n: int) -> list[int]:
    """Labelling ``perm`` (position -> vertex) giving the least column string."""
    perm, _ = _search_canon(adj, n, None)
    return perm


def is_canonical(adj: Sequence[int], n: int) -> bool:
    """Whether the identity labelling already gives the least column string."""
    _, smaller = _search_canon(adj, n, identity_columns(adj, n))
    return not smaller

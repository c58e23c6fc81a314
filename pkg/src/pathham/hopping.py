"""Hopping closure of a vertex off a cycle.

Starting from ``Y_0 = {}``, repeat

    X_j = N(Y_{j-1} + {v0})
    Y_j = {c in C : both cycle-neighbours of c lie in X_j}

until nothing changes.  When ``C`` is a longest cycle and ``v0`` has all its
neighbours on ``C``, the closure ``X`` lies on ``C``, misses ``Y`` and
contains no two consecutive cycle vertices.  ``check_hopping_invariants``
tests exactly these three facts on a given instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, is_cycle, members, popcount, vset


@dataclass(frozen=True)
class HoppingClosure:
    X: int
    Y: int
    trace: tuple[tuple[int, int], ...]  # (X_j, Y_j) for j = 0, 1, ...; entry 0 is empty
    iterations: int

    @property
    def x(self) -> int:
        return popcount(self.X)

    @property
    def y(self) -> int:
        return popcount(self.Y)


def _neighbourhood(g: Graph, mask: int) -> int:
    out = 0
    for v in members(mask):
        out |= g.adj[v]
    return out


def compute_closure(g1: Graph, c1: Sequence[int], v0: int) -> HoppingClosure:
    c1 = tuple(c1)
    if not is_cycle(g1, c1):
        raise ValueError(f"{c1} is not a cycle of the graph")
    on_cycle = vset(c1)
    if on_cycle >> v0 & 1:
        raise ValueError(f"v0={v0} lies on the cycle")
    if g1.adj[v0] & ~on_cycle:
        raise ValueError(f"v0={v0} has a neighbour off the cycle")

    m = len(c1)
    # cycle vertex -> bitmask of its two cycle neighbours
    flank = [(c1[i], (1 << c1[i - 1]) | (1 << c1[(i + 1) % m])) for i in range(m)]

    trace = [(0, 0)]
    y = 0
    for j in range(1, g1.n + 2):
        x = _neighbourhood(g1, y | (1 << v0))
        y = 0
        for c, nb in flank:
            if x & nb == nb:
                y |= 1 << c
        trace.append((x, y))
        if trace[-1] == trace[-2]:
            return HoppingClosure(x, y, tuple(trace), j - 1)
    raise AssertionError("closure did not stabilize")  # sets are monotone and bounded


@dataclass
class HoppingReport:
    x_on_cycle: bool
    disjoint: bool
    no_consecutive: bool
    x_at_least_k: bool | None = None
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.x_on_cycle and self.disjoint and self.no_consecutive
                and self.x_at_least_k is not False)


def check_hopping_invariants(g1: Graph, c1: Sequence[int], v0: int, hc: HoppingClosure,
                             k: int | None = None) -> HoppingReport:
    """Check the closure facts guaranteed for a longest cycle.

    Violations are reported with a witness, not raised: they mean the cycle
    was not longest.  With ``k`` given, also check ``|X| >= k``.
    """
    c1 = tuple(c1)
    on_cycle = vset(c1)
    violations = []

    off = hc.X & ~on_cycle
    if off:
        violations.append(("X not on cycle", tuple(members(off))))
    both = hc.X & hc.Y
    if both:
        violations.append(("X meets Y", tuple(members(both))))
    consecutive = [(a, b) for a, b in zip(c1, c1[1:] + c1[:1]) if hc.X >> a & 1 and hc.X >> b & 1]
    if consecutive:
        violations.append(("consecutive pair in X", consecutive[0]))
    size_ok = None
    if k is not None:
        size_ok = hc.x >= k
        if not size_ok:
            violations.append(("|X| < k", tuple(members(hc.X))))

    return HoppingReport(not off, not both, not consecutive, size_ok, violations)


def format_trace(hc: HoppingClosure) -> str:
    lines = []
    for j, (x, y) in enumerate(hc.trace):
        lines.append(f"j={j} X={members(x)} Y={members(y)}")
    lines.append(f"fixed point after {hc.iterations} iteration(s): |X|={hc.x} |Y|={hc.y}")
    return "\n".join(lines)

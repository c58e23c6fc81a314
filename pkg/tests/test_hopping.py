import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_cycles, hopping_sets, longest_cycles
from pathham.graph import Graph, members, vset
from pathham.hopping import check_hopping_invariants, compute_closure, format_trace
from test_graph import graphs


def cycle_plus(m, extra_edges, hub_nbrs):
    """Cycle 0..m-1, extra chords, and a hub vertex m adjacent to ``hub_nbrs``."""
    edges = [(i, (i + 1) % m) for i in range(m)] + list(extra_edges)
    edges += [(m, v) for v in hub_nbrs]
    return Graph.from_edges(m + 1, edges)


def test_alternating_hub_on_c6():
    g = cycle_plus(6, [], [0, 2, 4])
    c = tuple(range(6))
    hc = compute_closure(g, c, 6)
    assert members(hc.X) == [0, 2, 4]
    assert members(hc.Y) == [1, 3, 5]
    X, Y, rounds = hopping_sets(g, c, 6)
    assert (vset(X), vset(Y), rounds) == (hc.X, hc.Y, hc.iterations)


def test_closure_grows_through_a_chord():
    g = cycle_plus(6, [(1, 3)], [0, 2, 4])
    c = tuple(range(6))
    hc = compute_closure(g, c, 6)
    X, Y, rounds = hopping_sets(g, c, 6)
    assert (vset(X), vset(Y), rounds) == (hc.X, hc.Y, hc.iterations)
    # Y_1 = {1,3,5}; the chord pulls 1 and 3 into X_2, then 2 joins Y and pulls in v0
    assert members(hc.X) == [0, 1, 2, 3, 4, 6]
    assert members(hc.Y) == [1, 2, 3, 5]
    assert hc.iterations == 3


def test_two_neighbours_fixed_immediately():
    g = cycle_plus(8, [], [0, 3])
    hc = compute_closure(g, tuple(range(8)), 8)
    assert hc.Y == 0
    assert hc.X == g.adj[8]
    assert hc.iterations == 1


def test_trace_shape():
    g = cycle_plus(6, [(1, 3)], [0, 2, 4])
    hc = compute_closure(g, tuple(range(6)), 6)
    assert hc.trace[0] == (0, 0)
    assert hc.trace[-1] == hc.trace[-2]
    assert len(hc.trace) == hc.iterations + 2
    assert "fixed point after 3" in format_trace(hc)


def test_errors():
    g = cycle_plus(6, [], [0, 2, 4])
    with pytest.raises(ValueError, match="lies on"):
        compute_closure(g, tuple(range(6)), 0)
    off = Graph.from_edges(8, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 7)])
    with pytest.raises(ValueError, match="off the cycle"):
        compute_closure(off, tuple(range(6)), 6)
    with pytest.raises(ValueError, match="not a cycle"):
        compute_closure(g, (0, 1, 3), 6)


def test_longest_cycle_passes():
    # Petersen graph: every longest cycle has 9 vertices
    from pathham.graph import petersen
    g = petersen()
    longest = longest_cycles(g)
    assert len(longest[0]) == 9
    for c in longest:
        v0 = next(v for v in range(10) if v not in c)
        hc = compute_closure(g, c, v0)
        rep = check_hopping_invariants(g, c, v0, hc, k=3)
        assert rep.ok, rep.violations


def test_non_longest_cycle_reports_witness():
    g = cycle_plus(6, [], [0, 1])
    hc = compute_closure(g, tuple(range(6)), 6)
    rep = check_hopping_invariants(g, tuple(range(6)), 6, hc)
    assert not rep.no_consecutive and not rep.ok
    assert ("consecutive pair in X", (0, 1)) in rep.violations


@st.composite
def instances(draw):
    g = draw(graphs(max_n=8))
    cycles = [c for c in all_cycles(g)
              if any(not (vset(c) >> v & 1) and g.adj[v] & ~vset(c) == 0 for v in range(g.n))]
    if not cycles:
        return None
    c = draw(st.sampled_from(cycles))
    v0 = draw(st.sampled_from([v for v in range(g.n)
                               if not (vset(c) >> v & 1) and g.adj[v] & ~vset(c) == 0]))
    return g, c, v0


@settings(max_examples=200, deadline=None)
@given(instances())
def test_closure_properties_any_cycle(inst):
    if inst is None:
        return
    g, c, v0 = inst
    hc = compute_closure(g, c, v0)
    for (x0, y0), (x1, y1) in zip(hc.trace, hc.trace[1:]):
        assert x0 & ~x1 == 0 and y0 & ~y1 == 0
    assert hc.iterations <= g.n
    X, Y, rounds = hopping_sets(g, c, v0)
    assert (vset(X), vset(Y), rounds) == (hc.X, hc.Y, hc.iterations)
    if c in longest_cycles(g):
        assert check_hopping_invariants(g, c, v0, hc).ok


def test_longest_alone_is_not_enough():
    # 0-4-3-5 is longest and v0=1 is isolated off it, but 3 hops off the cycle
    # and drags its pendant neighbour 2 into X; the graph is not 2-connected
    g = Graph.from_edges(6, [(2, 3), (0, 4), (1, 4), (3, 4), (0, 5), (1, 5), (3, 5)])
    c = (0, 4, 3, 5)
    assert c in longest_cycles(g)
    rep = check_hopping_invariants(g, c, 1, compute_closure(g, c, 1))
    assert not rep.x_on_cycle and ("X not on cycle", (2,)) in rep.violations

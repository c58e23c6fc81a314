"""Both kernel backends must agree bit for bit."""

import importlib

import pytest
from hypothesis import given, settings

from pathham import _pykernels, kernels
from pathham.graph import petersen, prism
from test_graph import graphs

try:
    _ck = importlib.import_module("pathham._ckernels")
except ImportError:
    _ck = None

needs_ext = pytest.mark.skipif(_ck is None, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _ck is not None:
        assert kernels.BACKEND == "cython"


@needs_ext
@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_canonical_backends_agree(g):
    assert _ck.canonical_perm(g.adj, g.n) == _pykernels.canonical_perm(g.adj, g.n)
    assert _ck.is_canonical(g.adj, g.n) == _pykernels.is_canonical(g.adj, g.n)


@needs_ext
@settings(max_examples=300, deadline=None)
@given(graphs(max_n=11))
def test_ham_backends_agree(g):
    if g.n < 3:
        return
    assert _ck.ham_complete(g.adj, g.n, [0]) == _pykernels.ham_complete(g.adj, g.n, [0])
    for v in range(g.n):
        for w in range(g.n):
            if g.has_edge(v, w):
                assert (_ck.ham_complete(g.adj, g.n, [v, w])
                        == _pykernels.ham_complete(g.adj, g.n, [v, w]))


@needs_ext
def test_ham_backends_agree_on_named_graphs():
    for g in (petersen(), prism(3), prism(5)):
        for path in ([0], [0, 1], [1, 0, 2] if g.has_edge(0, 2) else [1, 0, 4]):
            assert _ck.ham_complete(g.adj, g.n, path) == _pykernels.ham_complete(g.adj, g.n, path)


@needs_ext
def test_sixty_four_vertices():
    from pathham.graph import cycle_graph
    g = cycle_graph(64)
    assert _ck.ham_complete(g.adj, 64, [0]) == _pykernels.ham_complete(g.adj, 64, [0])


def test_forced_fallback_backend():
    import os
    import subprocess
    import sys
    env = dict(os.environ, PATHHAM_PURE_PYTHON="1")
    code = ("from pathham import kernels; from pathham.enumerate import enumerate_regular_graphs;"
            "print(kernels.BACKEND, len(enumerate_regular_graphs(3, 10)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split() == ["python", "21"]

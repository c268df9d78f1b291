import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pathfree import _kernels_py, kernels
from pathfree.generators import random_tournament

compiled = pytest.mark.skipif("compiled" not in kernels.available(),
                              reason="extension not built")


def _index_sets(rnd, n):
    verts = np.arange(n)
    rows = np.sort(rnd.choice(verts, rnd.integers(0, n + 1), replace=False)).astype(np.int64)
    cols = np.sort(rnd.choice(verts, rnd.integers(0, n + 1), replace=False)).astype(np.int64)
    return rows, cols


@compiled
@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.integers(0, 2**32))
def test_backends_agree(n, seed):
    from pathfree import _ckernels
    T = random_tournament(n, seed)
    rows, cols = _index_sets(np.random.default_rng(seed), n)
    for name in ("row_counts", "col_counts"):
        a = getattr(_ckernels, name)(T.adj, rows, cols)
        b = getattr(_kernels_py, name)(T.adj, rows, cols)
        assert np.array_equal(a, b)
    assert _ckernels.edge_count(T.adj, rows, cols) == _kernels_py.edge_count(T.adj, rows, cols)
    assert _ckernels.first_edge(T.adj, rows, cols) == _kernels_py.first_edge(T.adj, rows, cols)
    for v in range(min(n, 5)):
        for out in (True, False):
            assert np.array_equal(_ckernels.select_out(T.adj, v, cols, out),
                                  _kernels_py.select_out(T.adj, v, cols, out))


def test_first_edge_scan_order(backend):
    T = random_tournament(40, 3)
    rows = np.arange(0, 20, dtype=np.int64)
    cols = np.arange(20, 40, dtype=np.int64)
    i, j = kernels.first_edge(T.adj, rows, cols)
    hits = np.argwhere(T.adj[np.ix_(rows, cols)])
    assert (i, j) == tuple(hits[0])


def test_first_edge_none(backend):
    adj = np.triu(np.ones((6, 6), dtype=np.uint8), 1)
    assert kernels.first_edge(adj, np.array([4, 5]), np.array([0, 1])) == (-1, -1)


def test_select_out_excludes_self(backend):
    T = random_tournament(10, 1)
    cols = np.arange(10, dtype=np.int64)
    for v in range(10):
        out = kernels.select_out(T.adj, v, cols, True)
        inn = kernels.select_out(T.adj, v, cols, False)
        assert v not in out and v not in inn
        assert sorted(out.tolist() + inn.tolist() + [v]) == list(range(10))


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@compiled
@pytest.mark.parametrize("kind", ["random", "transitive"])
def test_extraction_identical_across_backends(kind):
    from fractions import Fraction
    from pathfree.errors import PatternWitness
    from pathfree.findtrans import find_trans
    from pathfree.generators import shuffled_transitive
    from pathfree.schedule import RELAXED, schedule_for

    def outcome(T, sched):
        try:
            return find_trans(T, sched).vertices.tolist()
        except PatternWitness as w:
            return ("witness", list(w.vertices))

    before = kernels.BACKEND
    try:
        for seed in range(4):
            T = random_tournament(700, seed) if kind == "random" else shuffled_transitive(700, seed)
            for k, lam in ((4, Fraction(1, 4)), (8, Fraction(1, 10))):
                sched = schedule_for(k, RELAXED, lam)
                results = []
                for b in ("compiled", "python"):
                    kernels.use_backend(b)
                    results.append(outcome(T, sched))
                assert results[0] == results[1]
    finally:
        kernels.use_backend(before)

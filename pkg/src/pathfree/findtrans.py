"""Recursive extraction of a transitive vertex set from a ``P_k``-free tournament."""
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .alphaseq import make_smooth
from .core import find_triangle, vertex_set
from .errors import DegenerateSize, InvariantViolation, PatternWitness
from .extract import Trace, create_sequence
from .patterns import check_pk_witness, pk_pattern


@dataclass
class TransResult:
    vertices: np.ndarray
    trace: Trace = field(default_factory=Trace)

    def __len__(self):
        return len(self.vertices)


def find_trans(T, schedule, verts=None, trace=None):
    """Transitive subset of ``T|verts`` (all of ``T`` by default).

    Raises :class:`PatternWitness` with a verified copy of ``P_k`` when the
    search reconstructs one.
    """
    verts = np.arange(T.n, dtype=np.int64) if verts is None else vertex_set(T, verts)
    trace = Trace() if trace is None else trace
    out = _find(T, verts, schedule, trace)
    return TransResult(out, trace)


def _find(T, verts, sched, trace):
    n = len(verts)
    if n <= 1:
        trace.hit("single" if n else "empty")
        return verts
    if sched.trivial(n):
        trace.hit("trivial")
        return verts[:2]
    try:
        return _split(T, verts, sched, trace)
    except DegenerateSize:
        if sched.strict:
            raise
        trace.hit("degenerate_fallback")
        return verts[:2]


def _split(T, verts, sched, trace):
    k = sched.k
    n = len(verts)
    theta = create_sequence(k, T, verts, sched, trace)
    smooth = make_smooth(k, theta, sched)
    A_u, A_v = backward_edge_walk(T, smooth.elements, sched, n)
    trace.hit("pair")
    if trace.record:
        trace.pair_exits.append((A_u, A_v))
    m1 = _find(T, A_u, sched, trace)
    m2 = _find(T, A_v, sched, trace)
    return np.union1d(m1, m2)


def backward_edge_walk(T, elements, sched, n=None):
    """Look for the backward edges of the matching ordering one at a time.

    Returns the first pair ``(A_u, A_v)`` of current elements with ``A_u``
    complete to ``A_v``. If every backward edge is found, the picked vertices
    form ``P_k`` and :class:`PatternWitness` is raised with them in path order.
    """
    k = sched.k
    adj = T.adj
    pat = pk_pattern(k)
    cur = [np.asarray(e, dtype=np.int64) for e in elements]
    if len(cur) != k:
        raise ValueError(f"need {k} elements, got {len(cur)}")
    floor_size = sched.c_k_sequence * n / 4 if n is not None else 0
    picked = {}
    for i in range(k // 2):
        u, v = pat.left[i] - 1, pat.right[i] - 1
        A_u, A_v = cur[u], cur[v]
        if len(A_u) == 0 or len(A_v) == 0:
            raise DegenerateSize(f"element {u + 1 if len(A_u) == 0 else v + 1} emptied")
        yi, xi = kernels.first_edge(adj, A_v, A_u)
        if yi < 0:
            if kernels.edge_count(adj, A_u, A_v) != len(A_u) * len(A_v):
                raise InvariantViolation("recursion pair is not complete")
            return A_u, A_v
        y, x = int(A_v[yi]), int(A_u[xi])
        if u in picked or v in picked:
            raise InvariantViolation("backward edges reuse a position")
        picked[u], picked[v] = x, y
        for t in range(k):
            if t in (u, v):
                continue
            # keep the common directed neighbors of y (position v) and x (position u)
            A = kernels.select_out(adj, y, cur[t], t > v)
            cur[t] = kernels.select_out(adj, x, A, t > u)
        if sched.strict and any(len(A) < floor_size for A in cur):
            raise InvariantViolation("element fell below c_k n / 4")
    path = [None] * k
    for pos, label in enumerate(pat.matching_order):
        path[label] = picked[pos]
    if not check_pk_witness(T, path):
        raise InvariantViolation(f"reconstructed path {path} is not P_{k}")
    raise PatternWitness(path, f"found a copy of P_{k}")


def verify_trans_result(T, result):
    """Independent re-check: the set is transitive and large enough."""
    verts = result.vertices if isinstance(result, TransResult) else result
    try:
        verts = vertex_set(T, verts)
    except ValueError:
        return False
    return len(verts) >= min(2, T.n) and find_triangle(T, verts) is None

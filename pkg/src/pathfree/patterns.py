"""The directed path ``P_k``: path ordering, matching ordering, witnesses.

Vertices ``v1..vk`` of the path are indices ``0..k-1``; positions in the
matching ordering are 1-based to keep ``left(i)``/``right(i)`` readable.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Tournament
from .errors import PreconditionError, UnsupportedSize


def path_tournament(k):
    """``P_k``: backward edges are exactly ``(v_{i+1}, v_i)``; the rest go forward."""
    if k < 1:
        raise PreconditionError("path needs k >= 1")
    return _path_tournament(k)


@lru_cache(maxsize=None)
def _path_tournament(k):
    adj = np.triu(np.ones((k, k), dtype=np.uint8), 2)
    idx = np.arange(k - 1)
    adj[idx + 1, idx] = 1
    return Tournament(adj, validate=False)


def backward_edges(T, order):
    """Edges ``(a, b)`` with ``b`` before ``a`` in ``order``."""
    order = list(order)
    out = []
    for q in range(len(order)):
        for p in range(q):
            if T.adj[order[q], order[p]]:
                out.append((order[q], order[p]))
    return out


@dataclass(frozen=True)
class PkPattern:
    k: int
    matching_order: tuple  # path labels (0-based) at positions 1..k
    backward: tuple  # (y, x) path labels: y at right(i), x at left(i)
    left: tuple
    right: tuple

    def position(self, label):
        return self.matching_order.index(label) + 1


def matching_order(k):
    """``v1``, then ``(v3, v2), (v5, v4), ...``, closed by ``v_k`` (0-based labels)."""
    order = [0]
    for a in range(2, k - 1, 2):
        order += [a, a - 1]
    order.append(k - 1)
    return tuple(order)


def pk_pattern(k):
    if k < 4 or k % 2:
        raise UnsupportedSize(f"matching ordering is only built for even k >= 4, got {k}")
    return _pk_pattern(k)


@lru_cache(maxsize=None)
def _pk_pattern(k):
    order = matching_order(k)
    assert sorted(order) == list(range(k))
    pos = {lab: p + 1 for p, lab in enumerate(order)}
    back = backward_edges(path_tournament(k), order)
    back.sort(key=lambda e: pos[e[1]])
    ends = [lab for e in back for lab in e]
    if len(back) != k // 2 or len(set(ends)) != len(ends):
        raise AssertionError(f"backward edges of the matching ordering are not a matching: {back}")
    left = tuple(pos[x] for _, x in back)
    right = tuple(pos[y] for y, _ in back)
    assert all(a < b for a, b in zip(left, right))
    assert all(a < b for a, b in zip(left, left[1:]))
    return PkPattern(k, order, tuple(back), left, right)


def check_pk_witness(T, seq):
    """True iff ``seq``, read as a path ordering, induces exactly ``P_k``."""
    seq = [int(v) for v in seq]
    if len(set(seq)) != len(seq):
        raise PreconditionError("witness has repeated vertices")
    if any(not 0 <= v < T.n for v in seq):
        raise PreconditionError("witness vertex out of range")
    sub = T.adj[np.ix_(seq, seq)]
    return np.array_equal(sub, path_tournament(len(seq)).adj)

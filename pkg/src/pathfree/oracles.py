"""Exact brute-force answers for small tournaments.

These are deliberately independent of the extraction code: they work on
bitmasks over all vertex subsets and never call the kernels.
"""
from dataclasses import dataclass

import numpy as np

from .core import Tournament
from .errors import BudgetExceeded
from .patterns import check_pk_witness


@dataclass(frozen=True)
class OracleBudget:
    max_n_transitive: int = 22
    max_n_dichromatic: int = 15
    max_n_homogeneous: int = 16
    max_nodes_pk_search: int = 5_000_000

    def __post_init__(self):
        if min(self.max_n_transitive, self.max_n_dichromatic,
               self.max_n_homogeneous, self.max_nodes_pk_search) <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _masks(T):
    """Out- and in-neighborhoods as Python int bitmasks."""
    out = [0] * T.n
    inn = [0] * T.n
    for u, v in np.argwhere(T.adj):
        out[u] |= 1 << int(v)
        inn[v] |= 1 << int(u)
    return out, inn


def transitive_table(T):
    """Boolean array over all ``2^n`` masks: is the subset transitive?

    Built by adding the highest vertex ``v`` to every transitive subset of
    ``{0..v-1}`` and rejecting it when some ``a`` in the subset has ``v -> a -> b -> v``.
    """
    n = T.n
    out, inn = _masks(T)
    table = np.ones(1, dtype=bool)
    for v in range(n):
        rest = np.arange(1 << v, dtype=np.int64)
        ok = table.copy()
        in_v = inn[v] & ((1 << v) - 1)
        for a in range(v):
            if T.adj[v, a] and out[a] & in_v:
                ok &= ~((((rest >> a) & 1) == 1) & ((rest & (out[a] & in_v)) != 0))
        table = np.concatenate([table, ok])
    return table


def _vertices(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _lex_min(masks, n):
    """Mask whose sorted vertex tuple is lexicographically smallest (same sizes)."""
    rev = np.zeros(len(masks), dtype=np.int64)
    for i in range(n):
        rev |= ((masks >> i) & 1) << (n - 1 - i)
    return int(masks[int(np.argmax(rev))])


def max_transitive_exact(T, budget=DEFAULT_BUDGET):
    """A largest transitive subset (lexicographically smallest among ties)."""
    if T.n > budget.max_n_transitive:
        raise BudgetExceeded(f"{T.n} vertices exceeds transitive-oracle cap {budget.max_n_transitive}")
    if T.n == 0:
        return np.zeros(0, dtype=np.int64)
    table = transitive_table(T)
    masks = np.flatnonzero(table).astype(np.int64)
    sizes = np.bitwise_count(masks.astype(np.uint64))
    best = masks[sizes == sizes.max()]
    return np.array(_vertices(_lex_min(best, T.n)), dtype=np.int64)


def transitive_number(T, budget=DEFAULT_BUDGET):
    return len(max_transitive_exact(T, budget))


def _subset_counts(table, n):
    """``counts[S]`` = number of transitive subsets of ``S`` (empty set included)."""
    f = table.astype(np.int64)
    for i in range(n):
        bit = 1 << i
        f = f.reshape(-1, 2, bit)
        f[:, 1, :] += f[:, 0, :]
        f = f.reshape(-1)
    return f


def _cover_count(counts_pow, signs_parity, full, sub):
    """Number of ordered k-tuples of transitive sets covering ``sub`` exactly
    by inclusion-exclusion over the submasks of ``sub``."""
    idx = np.flatnonzero((np.arange(len(counts_pow)) & ~sub) == 0)
    parity = (np.bitwise_count(np.uint64(sub)) - signs_parity[idx]) & 1
    vals = counts_pow[idx]
    return int(vals[parity == 0].sum() - vals[parity == 1].sum())


def dichromatic_exact(T, budget=DEFAULT_BUDGET):
    """Minimum number of transitive classes, with one optimal partition."""
    from .coloring import Coloring

    n = T.n
    if n > budget.max_n_dichromatic:
        raise BudgetExceeded(f"{n} vertices exceeds dichromatic-oracle cap {budget.max_n_dichromatic}")
    if n == 0:
        return 0, Coloring([], {})
    table = transitive_table(T)
    counts = _subset_counts(table, n).astype(object)
    pops = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
    full = (1 << n) - 1
    powers = {}

    def coverable(sub, k):
        if sub == 0:
            return True
        if k == 0:
            return False
        if k not in powers:
            powers[k] = counts ** k
        return _cover_count(powers[k], pops, full, sub) > 0

    chi = next(k for k in range(1, n + 1) if coverable(full, k))
    trans = np.flatnonzero(table).astype(np.int64)
    trans = trans[np.argsort(-pops[trans], kind="stable")]
    classes = []
    rest = full
    for left in range(chi, 0, -1):
        low = rest & -rest
        cand = trans[((trans & low) != 0) & ((trans & ~rest) == 0)]
        for t in map(int, cand):
            if coverable(rest & ~t, left - 1):
                classes.append(_vertices(t))
                rest &= ~t
                break
        else:  # pragma: no cover - the count said a cover exists
            raise AssertionError("inclusion-exclusion and reconstruction disagree")
    assert rest == 0
    return chi, Coloring.from_classes(classes)


def find_pk_exhaustive(T, k, budget=DEFAULT_BUDGET):
    """Lexicographically first path-ordered copy of ``P_k``, or ``None``.

    Extends ``u_1, u_2, ...`` where ``u_{i+1}`` beats ``u_i`` and is beaten by
    every earlier ``u_j``.
    """
    n = T.n
    if k <= 0:
        return ()
    if k > n:
        return None
    out, inn = _masks(T)
    everyone = (1 << n) - 1
    nodes = 0
    seq = []

    def extend(common):
        nonlocal nodes
        if len(seq) == k:
            return True
        cand = common & inn[seq[-1]] if seq else everyone
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            nodes += 1
            if nodes > budget.max_nodes_pk_search:
                raise BudgetExceeded(f"P_{k} search exceeded {budget.max_nodes_pk_search} nodes")
            nxt = common & out[seq[-1]] if seq else everyone
            seq.append(w)
            if extend(nxt):
                return True
            seq.pop()
        return False

    if extend(everyone):
        assert check_pk_witness(T, seq)
        return tuple(seq)
    return None


def homogeneous_sets(T, budget=DEFAULT_BUDGET):
    """All homogeneous sets with between 2 and ``n - 1`` vertices."""
    n = T.n
    if n > budget.max_n_homogeneous:
        raise BudgetExceeded(f"{n} vertices exceeds homogeneous-set cap {budget.max_n_homogeneous}")
    if n <= 2:
        return []
    out, _ = _masks(T)
    masks = np.arange(1 << n, dtype=np.int64)
    size = np.bitwise_count(masks.astype(np.uint64))
    ok = (size >= 2) & (size <= n - 1)
    for v in range(n):
        beaten = masks & out[v]
        ok &= (((masks >> v) & 1) == 1) | (beaten == 0) | (beaten == masks)
    found = [_vertices(int(m)) for m in np.flatnonzero(ok)]
    found.sort(key=lambda s: (len(s), s))
    return [np.array(s, dtype=np.int64) for s in found]


def is_prime(T, budget=DEFAULT_BUDGET):
    return not homogeneous_sets(T, budget)

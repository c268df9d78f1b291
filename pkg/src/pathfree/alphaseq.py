"""Sequences of pairwise disjoint vertex sets with forward density bounds."""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .core import vertex_set
from .errors import DegenerateSize, InvariantViolation, PreconditionError


@dataclass(frozen=True, eq=False)
class AlphaSequence:
    host: object
    elements: tuple
    unexpected_fallback: bool = field(default=False)

    def __post_init__(self):
        elems = tuple(vertex_set(self.host, e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        for i, e in enumerate(elems):
            if len(e) == 0:
                raise PreconditionError(f"element {i + 1} is empty")
        union = np.concatenate(elems) if elems else np.zeros(0, np.int64)
        if len(np.unique(union)) != len(union):
            raise PreconditionError("elements are not pairwise disjoint")
        object.__setattr__(self, "_union", np.sort(union))

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (isinstance(other, AlphaSequence) and self.host is other.host
                and len(self) == len(other)
                and all(np.array_equal(a, b) for a, b in zip(self.elements, other.elements)))

    @property
    def vertices(self):
        return self._union

    def sizes(self):
        return [len(e) for e in self.elements]

    def index_of(self, v):
        for i, e in enumerate(self.elements):
            j = np.searchsorted(e, v)
            if j < len(e) and e[j] == v:
                return i
        raise PreconditionError(f"vertex {v} is in no element")


def directed_neighbors(seq, v, j):
    """Out-neighbors of ``v`` in element ``j`` if ``j`` comes later, else in-neighbors.

    ``j`` is 1-based like the element positions it names.
    """
    i = seq.index_of(v) + 1
    if not 1 <= j <= len(seq) or j == i:
        raise PreconditionError(f"bad element index {j} for vertex in element {i}")
    return kernels.select_out(seq.host.adj, int(v), seq[j - 1], j > i)


def truncate(seq, m):
    if any(len(e) < m for e in seq.elements):
        raise PreconditionError(f"cannot truncate to {m}: sizes {seq.sizes()}")
    if m <= 0:
        raise PreconditionError("truncation size must be positive")
    return AlphaSequence(seq.host, tuple(e[:m] for e in seq.elements))


def concat(a, b):
    if a.host is not b.host:
        raise PreconditionError("sequences live in different tournaments")
    if len(np.intersect1d(a.vertices, b.vertices)):
        raise PreconditionError("sequences overlap")
    return AlphaSequence(a.host, a.elements + b.elements)


@dataclass(frozen=True)
class AlphaReport:
    min_relative_size: Fraction
    min_pair_density: Fraction
    min_vertex_density: Fraction
    passed: bool

    def __bool__(self):
        return self.passed


def min_pair_density(seq):
    adj = seq.host.adj
    best = Fraction(1)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            e = kernels.edge_count(adj, seq[i], seq[j])
            best = min(best, Fraction(e, len(seq[i]) * len(seq[j])))
    return best


def _vertex_density_min(seq):
    """Worst ``d({x}, A_j)`` or ``d(A_i, {y})`` over all ``i < j``."""
    adj = seq.host.adj
    best = Fraction(1)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            a, b = seq[i], seq[j]
            out = kernels.row_counts(adj, a, b)
            inc = kernels.col_counts(adj, a, b)
            best = min(best, Fraction(int(out.min()), len(b)), Fraction(int(inc.min()), len(a)))
    return best


def check_alpha(seq, c, lam):
    n = seq.host.n
    rel = Fraction(min(seq.sizes()), n)
    dens = min_pair_density(seq)
    return AlphaReport(rel, dens, Fraction(-1),
                       rel >= Fraction(c) and dens >= 1 - Fraction(lam))


def check_smooth(seq, lam):
    n = seq.host.n
    rel = Fraction(min(seq.sizes()), n)
    vd = _vertex_density_min(seq)
    return AlphaReport(rel, min_pair_density(seq), vd, vd >= 1 - Fraction(lam))


def smoothing_cuts(seq, lam_k):
    """The sets ``C_{i,j}``: members of ``A_i`` with at most
    ``|A_j| (1 - 2 k lam_k)`` directed neighbors in ``A_j``.

    Returned as ``cuts[i][j]`` (0-based, ``None`` on the diagonal), all
    measured against ``seq`` as given.
    """
    k = len(seq)
    thr = 1 - 2 * k * Fraction(lam_k)
    adj = seq.host.adj
    cuts = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            a, b = seq[i], seq[j]
            # neighbors of x in A_j: out-neighbors for later j, in-neighbors for earlier
            cnt = kernels.row_counts(adj, a, b)
            if j < i:
                cnt = len(b) - cnt
            limit = thr * len(b)
            cuts[i][j] = a[cnt * limit.denominator <= limit.numerator]
    return cuts


def make_smooth(k, seq, schedule):
    """Drop from every ``A_i`` the vertices with too few directed neighbors in
    some other element; all cuts are computed before anything is removed."""
    if len(seq) != k:
        raise PreconditionError(f"expected a sequence of length {k}, got {len(seq)}")
    lam_k = schedule.lam_k
    cuts = smoothing_cuts(seq, lam_k)
    premise = all(_forward_density_ok(seq, i, j, lam_k)
                  for i in range(k) for j in range(i + 1, k))
    new = []
    for i in range(k):
        drop = [c for c in cuts[i] if c is not None and len(c)]
        removed = np.unique(np.concatenate(drop)) if drop else np.zeros(0, np.int64)
        if premise:
            for j, c in enumerate(cuts[i]):
                # each cut is at most |A_i| / (2k) when the input is dense enough
                if c is not None and 2 * k * len(c) > len(seq[i]):
                    raise InvariantViolation(
                        f"|C_{i + 1},{j + 1}| = {len(c)} exceeds |A_{i + 1}|/(2k)")
        kept = np.setdiff1d(seq[i], removed, assume_unique=True)
        if len(kept) == 0:
            raise DegenerateSize(f"smoothing emptied element {i + 1}")
        if premise and 2 * len(kept) < len(seq[i]):
            raise InvariantViolation(f"smoothing removed more than half of element {i + 1}")
        new.append(kept)
    out = AlphaSequence(seq.host, tuple(new))
    if premise and not check_smooth(out, schedule.lam_f):
        raise InvariantViolation("smoothed sequence is not smooth at lambda_f")
    return out


def _forward_density_ok(seq, i, j, lam):
    e = kernels.edge_count(seq.host.adj, seq[i], seq[j])
    lam = Fraction(lam)
    pairs = len(seq[i]) * len(seq[j])
    return (pairs - e) * lam.denominator <= lam.numerator * pairs

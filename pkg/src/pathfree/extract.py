"""Dense ordered pairs and sequences of dense pairs in a forbidden-pattern-free tournament.

All routines work on vertex index arrays of a host tournament; restricting
to ``T|X`` means passing ``X``, never copying the matrix.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from . import kernels
from .alphaseq import AlphaSequence, min_pair_density, concat, truncate
from .core import Density
from .errors import DegenerateSize, InvariantViolation, PatternWitness, PreconditionError
from .patterns import path_tournament

_CHUNK = 256


@dataclass(frozen=True, eq=False)
class DensePair:
    X: np.ndarray
    Y: np.ndarray
    density: Density
    branch: str  # "forward": X is the candidate set, "backward": Y is
    depth: int
    m: int


@dataclass
class PatternState:
    """Remaining sets ``S_j`` (aligned with the vertices of ``pattern``)."""

    sets: list
    pattern: object
    n: int
    chosen: list = field(default_factory=list)

    def __post_init__(self):
        self.sets = [np.asarray(s, dtype=np.int64) for s in self.sets]
        if len(self.sets) != self.pattern.n or not self.sets:
            raise PreconditionError("pattern size must match the number of sets")
        if any(len(s) == 0 for s in self.sets):
            raise PreconditionError("sets must be nonempty")


@dataclass
class Trace:
    """What an extraction run did; vertex sets are kept only when ``record``."""

    record: bool = False
    exits: dict = field(default_factory=dict)
    dense_pairs: list = field(default_factory=list)
    pair_exits: list = field(default_factory=list)
    sequences: list = field(default_factory=list)
    unexpected_fallbacks: int = 0

    def hit(self, name):
        self.exits[name] = self.exits.get(name, 0) + 1


def _floor(q, x):
    return math.floor(Fraction(q) * x)


def _neighbor_counts(adj, cand, others, out_dir):
    """``counts[a, b]``: neighbors of ``cand[a]`` in ``others[b]`` in the pattern's direction."""
    counts = np.empty((len(cand), len(others)), dtype=np.int64)
    for b, (s, fwd) in enumerate(zip(others, out_dir)):
        c = kernels.row_counts(adj, cand, s)
        counts[:, b] = c if fwd else len(s) - c
    return counts


def make_dense_pair(T, state, schedule, trace=None):
    """Try to grow a copy of ``state.pattern`` one vertex per set; when no
    candidate survives, return a dense pair built from the failing vertices.

    Raises :class:`PatternWitness` when the whole pattern is embedded and
    :class:`DegenerateSize` when a rounded size drops to zero.
    """
    adj = T.adj
    lam = Fraction(schedule.lam)
    sets = list(state.sets)
    H = state.pattern.adj
    labels = list(range(len(sets)))  # pattern vertex of each set
    chosen = list(state.chosen)
    depth = 0
    while True:
        first, others = sets[0], sets[1:]
        if not others:
            witness = chosen + [int(first[0])]
            raise PatternWitness(witness, "dense-pair search embedded the whole pattern")
        h0 = labels[0]
        out_dir = [bool(H[h0, h]) for h in labels[1:]]
        sizes_o = np.array([len(s) for s in others], dtype=np.int64)
        v0 = None
        bad_of = []
        for lo in range(0, len(first), _CHUNK):
            cand = first[lo:lo + _CHUNK]
            counts = _neighbor_counts(adj, cand, others, out_dir)
            # bad iff the count falls below lam * |S_j|
            bad = counts * lam.denominator < lam.numerator * sizes_o
            good = ~bad.any(axis=1)
            if good.any():
                v0 = int(cand[int(np.argmax(good))])
                break
            bad_of.append(np.argmax(bad, axis=1))
        if v0 is not None:
            new_sets = []
            for s, fwd in zip(others, out_dir):
                size = _floor(lam, len(s))
                if size == 0:
                    raise DegenerateSize(f"set of size {len(s)} shrinks to zero")
                nb = kernels.select_out(adj, v0, s, fwd)
                if len(nb) < size:
                    raise InvariantViolation("candidate without enough neighbors")
                new_sets.append(nb[:size])
                if len(new_sets[-1]) != size:
                    raise InvariantViolation("shrink is not exactly a factor lambda")
            chosen.append(v0)
            sets = new_sets
            labels = labels[1:]
            depth += 1
            continue

        bad_idx = np.concatenate(bad_of)
        sizes = np.bincount(bad_idx, minlength=len(others))
        b0 = int(np.argmax(sizes))
        P = first[bad_idx == b0]
        S = others[b0]
        fwd = out_dir[b0]
        m = schedule.dense_pair_size(state.n) if schedule.strict else min(len(P), len(S))
        if m == 0 or len(P) < m or len(S) < m:
            raise DegenerateSize(f"dense pair size {m} with |P|={len(P)}, |S|={len(S)}")
        # members of P all miss the pattern direction towards S, so they are
        # dense in the opposite direction
        out_deg = kernels.row_counts(adj, P, S)
        toward = out_deg if fwd else len(S) - out_deg
        if np.any(toward * lam.denominator >= lam.numerator * len(S)):
            raise InvariantViolation("candidate set is not uniformly oriented")
        out_edges = int(out_deg.sum())
        forward = 2 * out_edges >= len(P) * len(S)
        if forward == fwd:
            raise InvariantViolation("orientation disagrees with the pattern edge")
        Pt = P[:m]
        from_P = kernels.col_counts(adj, Pt, S)
        score = from_P if forward else len(Pt) - from_P
        order = np.lexsort((S, -score))
        W = np.sort(S[order[:m]])
        X, Y = (Pt, W) if forward else (W, Pt)
        dens = Density(kernels.edge_count(adj, X, Y), m, m)
        if not dens.at_least(1 - lam):
            raise InvariantViolation(f"dense pair has density {dens.value} < 1 - {lam}")
        pair = DensePair(X, Y, dens, "forward" if forward else "backward", depth, m)
        if trace is not None:
            trace.hit("dense_pair")
            if trace.record:
                trace.dense_pairs.append(pair)
        return pair


def create_sequence(r, T, verts, schedule, trace=None):
    """Build a length-``r`` sequence of dense pairs inside ``T|verts``."""
    if r < 2 or r & (r - 1):
        raise PreconditionError(f"sequence length must be a power of two >= 2, got {r}")
    k = schedule.k
    verts = np.asarray(verts, dtype=np.int64)
    n = len(verts)
    if n <= k:
        raise DegenerateSize(f"{n} vertices cannot be split into {k} parts")
    block = n // k
    parts = [verts[i * block:(i + 1) * block] for i in range(k)]
    pair = make_dense_pair(T, PatternState(parts, path_tournament(k), n), schedule, trace)
    if r == 2:
        return AlphaSequence(T, (pair.X, pair.Y))

    lefts = _carve(r // 2, T, pair.X, schedule, trace)
    rights = _carve(r // 2, T, pair.Y, schedule, trace)
    thr = 1 - 4 * Fraction(schedule.lam)
    adj = T.adj
    for L in lefts:
        for R in rights:
            e = kernels.edge_count(adj, L.vertices, R.vertices)
            if Density(e, len(L.vertices), len(R.vertices)).at_least(thr):
                joined = concat(L, R)
                if schedule.strict:
                    m = schedule.sequence_size(r, n)
                else:
                    m = min(joined.sizes())
                if m == 0 or min(joined.sizes()) < m:
                    raise DegenerateSize(f"cannot truncate sizes {joined.sizes()} to {m}")
                seq = truncate(joined, m)
                if schedule.strict and min_pair_density(seq) < 1 - schedule.lambda_r(r):
                    raise InvariantViolation("sequence misses its density bound")
                if trace is not None and trace.record:
                    trace.sequences.append(seq)
                return seq
    if trace is not None:
        trace.unexpected_fallbacks += 1
        trace.hit("sequence_fallback")
    joined = concat(lefts[0], rights[0])
    return AlphaSequence(T, joined.elements, unexpected_fallback=True)


def _carve(r, T, pool, schedule, trace):
    """Repeatedly build length-``r`` sequences in ``pool`` while half of it remains."""
    out = []
    s = len(pool)
    while 2 * len(pool) >= s and len(pool):
        try:
            seq = create_sequence(r, T, pool, schedule, trace)
        except DegenerateSize:
            if schedule.strict or not out:
                raise
            break
        out.append(seq)
        pool = np.setdiff1d(pool, seq.vertices, assume_unique=True)
    if not out:
        raise DegenerateSize("no sequence could be carved")
    return out

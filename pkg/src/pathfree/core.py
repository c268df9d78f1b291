"""Dense tournaments, vertex sets, directed density and transitivity."""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import MalformedInput, PreconditionError

MAX_VERTICES = 1 << 20


class Tournament:
    """A tournament on vertices ``0..n-1`` stored as a read-only 0/1 matrix.

    ``adj[u, v] == 1`` iff the edge ``u -> v`` exists.
    """

    __slots__ = ("adj",)

    def __init__(self, adj, *, validate=True):
        adj = np.ascontiguousarray(adj, dtype=np.uint8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise MalformedInput(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] > MAX_VERTICES:
            raise MalformedInput(f"{adj.shape[0]} vertices exceeds cap {MAX_VERTICES}")
        if validate:
            _check_orientation(adj)
        adj.setflags(write=False)
        self.adj = adj

    @property
    def n(self):
        return self.adj.shape[0]

    def __len__(self):
        return self.adj.shape[0]

    def __eq__(self, other):
        return isinstance(other, Tournament) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"Tournament(n={self.n})"

    def beats(self, u, v):
        return bool(self.adj[u, v])

    def edges(self):
        """Every edge as an ordered pair, row-major."""
        return [tuple(map(int, e)) for e in np.argwhere(self.adj)]

    def scores(self):
        return self.adj.sum(axis=1, dtype=np.int64)


def _check_orientation(adj):
    if adj.size and adj.max() > 1:
        raise MalformedInput("adjacency entries must be 0 or 1")
    if np.any(np.diagonal(adj)):
        v = int(np.flatnonzero(np.diagonal(adj))[0])
        raise MalformedInput(f"self-loop at vertex {v}")
    both = adj.astype(np.int16) + adj.T
    np.fill_diagonal(both, 1)
    bad = np.argwhere(both != 1)
    if len(bad):
        u, v = map(int, bad[0])
        what = "both orientations" if both[u, v] == 2 else "no orientation"
        raise MalformedInput(f"pair {{{u}, {v}}} has {what}")


def build_tournament(n, edges):
    """Build a tournament from a list that orients every pair exactly once."""
    if n < 0:
        raise MalformedInput("vertex count must be non-negative")
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}")
        if adj[u, v] or adj[v, u]:
            raise MalformedInput(f"pair {{{u}, {v}}} oriented more than once")
        adj[u, v] = 1
    return Tournament(adj)


def transitive_tournament(n):
    """The transitive tournament with ``u -> v`` whenever ``u < v``."""
    return Tournament(np.triu(np.ones((n, n), dtype=np.uint8), 1), validate=False)


def vertex_set(T, members):
    """Normalize ``members`` to a sorted int64 array of distinct vertices of ``T``."""
    arr = np.asarray(list(members) if not isinstance(members, np.ndarray) else members,
                     dtype=np.int64).ravel()
    arr = np.sort(arr)
    if len(arr) and (arr[0] < 0 or arr[-1] >= T.n):
        raise PreconditionError(f"vertex set not contained in [0, {T.n})")
    if len(arr) > 1 and np.any(arr[1:] == arr[:-1]):
        raise PreconditionError("vertex set has duplicates")
    return arr


@dataclass(frozen=True)
class Density:
    """Exact directed density ``edges / (size_x * size_y)``."""

    edges: int
    size_x: int
    size_y: int

    @property
    def value(self):
        return Fraction(self.edges, self.size_x * self.size_y)

    def at_least(self, q):
        q = Fraction(q)
        return self.edges * q.denominator >= q.numerator * self.size_x * self.size_y

    def __float__(self):
        return self.edges / (self.size_x * self.size_y)

    def __eq__(self, other):
        if isinstance(other, Density):
            return self.value == other.value
        return self.value == other

    def __lt__(self, other):
        return self.value < _as_value(other)

    def __le__(self, other):
        return self.value <= _as_value(other)

    def __gt__(self, other):
        return self.value > _as_value(other)

    def __ge__(self, other):
        return self.value >= _as_value(other)

    __hash__ = None


def _as_value(x):
    return x.value if isinstance(x, Density) else x


def density(T, X, Y):
    """Fraction of the ``|X||Y|`` pairs that are oriented from ``X`` to ``Y``."""
    X = vertex_set(T, X)
    Y = vertex_set(T, Y)
    if len(X) == 0 or len(Y) == 0:
        raise PreconditionError("density needs nonempty sets")
    if len(np.intersect1d(X, Y, assume_unique=True)):
        raise PreconditionError("density needs disjoint sets")
    return Density(kernels.edge_count(T.adj, X, Y), len(X), len(Y))


def is_complete_to(T, X, Y):
    """True iff every vertex of ``X`` beats every vertex of ``Y``."""
    return kernels.edge_count(T.adj, X, Y) == len(X) * len(Y)


def find_triangle(T, X):
    """Return a directed 3-cycle ``(a, b, c)`` inside ``X`` or ``None``.

    Uses scores: an edge ``u -> v`` with ``score(v) >= score(u)`` exists iff
    ``T|X`` is not transitive, and then some ``w`` in ``out(v)`` beats ``u``.
    """
    X = vertex_set(T, X)
    if len(X) < 3:
        return None
    score = kernels.row_counts(T.adj, X, X)
    if len(np.unique(score)) == len(X):
        return None
    sub = T.adj[np.ix_(X, X)].astype(bool)
    cand = np.argwhere(sub & (score[None, :] >= score[:, None]))
    ui, vi = map(int, cand[0])
    w = np.flatnonzero(sub[vi] & sub[:, ui])
    return int(X[ui]), int(X[vi]), int(X[w[0]])


def is_transitive(T, X):
    return find_triangle(T, X) is None


def topological_order(T, X):
    """Order ``X`` by decreasing score within ``T|X`` (a source first)."""
    X = vertex_set(T, X)
    score = kernels.row_counts(T.adj, X, X)
    return X[np.argsort(-score, kind="stable")]


def induced(T, X):
    """Subtournament ``T|X`` and the map from its vertices to those of ``T``."""
    X = vertex_set(T, X)
    if len(X) == 0:
        raise PreconditionError("induced subtournament of an empty set")
    return Tournament(T.adj[np.ix_(X, X)], validate=False), X

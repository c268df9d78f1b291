"""Random tournaments, substitution products and the iterated product family."""
from dataclasses import dataclass, field
import logging

import numpy as np

from .core import MAX_VERTICES, Tournament
from .errors import PreconditionError
from .oracles import DEFAULT_BUDGET, find_pk_exhaustive, max_transitive_exact

log = logging.getLogger(__name__)


def random_tournament(n, seed):
    """Orient every pair ``i < j`` (row-major order) by one fair coin: 1 means ``i -> j``."""
    if n < 1:
        raise PreconditionError("random tournament needs n >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8)
    iu, ju = np.triu_indices(n, 1)
    adj = np.zeros((n, n), dtype=np.uint8)
    adj[iu, ju] = bits
    adj[ju, iu] = 1 - bits
    return Tournament(adj, validate=False)


def shuffled_transitive(n, seed):
    """Transitive tournament with its vertex labels permuted."""
    perm = np.random.Generator(np.random.PCG64(seed)).permutation(n)
    rank = np.empty(n, dtype=np.int64)
    rank[perm] = np.arange(n)
    adj = (rank[:, None] < rank[None, :]).astype(np.uint8)
    return Tournament(adj, validate=False)


def substitution_product(S, F):
    """Replace every vertex of ``S`` by a copy of ``F``; vertex ``i*|F| + a`` is copy ``a`` of block ``i``."""
    if S.n < 1 or F.n < 1:
        raise PreconditionError("product factors must be nonempty")
    if S.n * F.n > MAX_VERTICES:
        raise PreconditionError(f"product has {S.n * F.n} vertices, over the cap")
    adj = np.kron(S.adj, np.ones((F.n, F.n), dtype=np.uint8))
    adj += np.kron(np.eye(S.n, dtype=np.uint8), F.adj)
    return Tournament(adj, validate=False)


def single_vertex():
    return Tournament(np.zeros((1, 1), dtype=np.uint8), validate=False)


@dataclass
class FamilySpec:
    base: Tournament
    depth: int
    seed: int = None
    pk_free_checked_to: int = -1
    tr_checked_to: int = -1
    notes: dict = field(default_factory=dict)


def family(spec, max_vertices=MAX_VERTICES):
    """``F_0`` is one vertex and ``F_{i+1} = B x F_i``."""
    if spec.depth < 0:
        raise PreconditionError("depth must be non-negative")
    if spec.base.n ** spec.depth > max_vertices:
        raise PreconditionError(
            f"|B|^depth = {spec.base.n}^{spec.depth} exceeds the cap {max_vertices}")
    T = single_vertex()
    for _ in range(spec.depth):
        T = substitution_product(spec.base, T)
    return T


class NotFound(Exception):
    def __init__(self, attempts):
        super().__init__(f"no base tournament found in {attempts} seeds")
        self.attempts = attempts


def search_base(k, n, tr_max, seeds, start=0, budget=DEFAULT_BUDGET):
    """First seeded random ``n``-vertex tournament that is ``P_k``-free with
    largest transitive subset at most ``tr_max``, both checked exactly."""
    for seed in range(start, start + seeds):
        T = random_tournament(n, seed)
        if len(max_transitive_exact(T, budget)) > tr_max:
            continue
        if find_pk_exhaustive(T, k, budget) is not None:
            continue
        log.info("base found at seed %d after %d attempts", seed, seed - start + 1)
        return FamilySpec(T, 1, seed=seed, pk_free_checked_to=1, tr_checked_to=1)
    raise NotFound(seeds)

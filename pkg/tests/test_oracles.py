import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from pathfree.core import build_tournament, transitive_tournament
from pathfree.errors import BudgetExceeded
from pathfree.generators import random_tournament
from pathfree.oracles import (OracleBudget, dichromatic_exact, find_pk_exhaustive,
                              homogeneous_sets, is_prime, max_transitive_exact,
                              transitive_number)
from pathfree.patterns import path_tournament

from conftest import acyclic_by_sort, is_path_copy, tournaments


def _brute_tr(T):
    for size in range(T.n, 0, -1):
        for X in itertools.combinations(range(T.n), size):
            if acyclic_by_sort(T, X):
                return size
    return 0


def _brute_chi(T):
    for k in range(1, T.n + 1):
        for colors in itertools.product(range(k), repeat=T.n):
            if all(acyclic_by_sort(T, [v for v in range(T.n) if colors[v] == c])
                   for c in range(k) if c in colors):
                return k
    return 0


def _brute_pk(T, k):
    return next((p for p in itertools.permutations(range(T.n), k) if is_path_copy(T, p)), None)


def _brute_homogeneous(T):
    found = []
    for size in range(2, T.n):
        for X in itertools.combinations(range(T.n), size):
            rest = [v for v in range(T.n) if v not in X]
            if all(len({T.adj[v, x] for x in X}) == 1 for v in rest):
                found.append(list(X))
    return found


def test_examples(c3):
    assert max_transitive_exact(path_tournament(4)).tolist() == [0, 1, 3]
    assert dichromatic_exact(path_tournament(4))[0] == 2
    assert dichromatic_exact(c3)[0] == 2
    assert find_pk_exhaustive(path_tournament(6), 4) == (0, 1, 2, 3)
    assert find_pk_exhaustive(transitive_tournament(6), 4) is None


@settings(max_examples=60, deadline=None)
@given(tournaments(min_n=1, max_n=7))
def test_against_brute_force(T):
    X = max_transitive_exact(T)
    assert acyclic_by_sort(T, X) and len(X) == _brute_tr(T) == transitive_number(T)
    chi, col = dichromatic_exact(T)
    assert chi == len(col) == _brute_chi(T)
    assert sorted(np.concatenate(col.classes).tolist()) == list(range(T.n))
    assert all(acyclic_by_sort(T, c) for c in col.classes)
    for k in (3, 4):
        assert find_pk_exhaustive(T, k) == _brute_pk(T, k)
    assert [h.tolist() for h in homogeneous_sets(T)] == sorted(_brute_homogeneous(T),
                                                               key=lambda s: (len(s), s))


def test_max_transitive_ties_lexicographic():
    # in C3 every pair is transitive; the smallest one wins
    T = build_tournament(3, [(0, 1), (1, 2), (2, 0)])
    assert max_transitive_exact(T).tolist() == [0, 1]


def test_budgets():
    small = OracleBudget(max_n_transitive=4, max_n_dichromatic=4, max_n_homogeneous=4,
                         max_nodes_pk_search=3)
    T = random_tournament(6, 0)
    for call in (lambda: max_transitive_exact(T, small), lambda: dichromatic_exact(T, small),
                 lambda: homogeneous_sets(T, small), lambda: find_pk_exhaustive(T, 6, small)):
        with pytest.raises(BudgetExceeded):
            call()


def test_primality():
    assert is_prime(path_tournament(5)) and not is_prime(transitive_tournament(4))

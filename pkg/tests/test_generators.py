from pathlib import Path

import numpy as np
import pytest

from pathfree.core import transitive_tournament
from pathfree.errors import PreconditionError
from pathfree.generators import (FamilySpec, NotFound, family, random_tournament, search_base,
                                 shuffled_transitive, single_vertex, substitution_product)
from pathfree.io import format_tournament, parse_tournament
from pathfree.oracles import find_pk_exhaustive, max_transitive_exact
from pathfree.patterns import path_tournament

from conftest import acyclic_by_sort

DATA = Path(__file__).parent / "data"


def test_random_is_reproducible():
    assert random_tournament(50, 9) == random_tournament(50, 9)
    assert random_tournament(50, 9) != random_tournament(50, 10)


def test_random_golden():
    frozen = parse_tournament((DATA / "random_n5_seed42.txt").read_text())
    assert random_tournament(5, 42) == frozen


def test_shuffled_transitive():
    T = shuffled_transitive(40, 3)
    assert acyclic_by_sort(T, range(40))
    assert T != transitive_tournament(40)


def test_product_structure():
    P4, F = path_tournament(4), transitive_tournament(3)
    B = substitution_product(P4, F)
    for u in range(12):
        for v in range(12):
            if u // 3 == v // 3:
                assert B.adj[u, v] == F.adj[u % 3, v % 3]
            else:
                assert B.adj[u, v] == P4.adj[u // 3, v // 3]


def test_family_sizes():
    B = path_tournament(4)
    assert family(FamilySpec(B, 0)).n == 1
    F2 = family(FamilySpec(B, 2))
    assert F2 == substitution_product(B, substitution_product(B, single_vertex()))
    with pytest.raises(PreconditionError):
        family(FamilySpec(B, 11))


def test_search_base():
    spec = search_base(5, 6, 4, seeds=200)
    assert find_pk_exhaustive(spec.base, 5) is None
    assert len(max_transitive_exact(spec.base)) <= 4
    with pytest.raises(NotFound):
        search_base(3, 6, 1, seeds=3)


def test_format_roundtrip():
    T = random_tournament(9, 1)
    assert parse_tournament(format_tournament(T, "x")) == T

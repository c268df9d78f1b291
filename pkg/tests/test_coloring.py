from fractions import Fraction

import numpy as np
import pytest

from pathfree.coloring import Coloring, acyclic_coloring, verify_coloring
from pathfree.errors import PatternWitness
from pathfree.generators import random_tournament, shuffled_transitive
from pathfree.schedule import RELAXED, STRICT, schedule_for

from conftest import acyclic_by_sort


def test_strict_colors_in_pairs():
    T = random_tournament(11, 2)
    col = acyclic_coloring(T, schedule_for(4, STRICT))
    assert verify_coloring(T, col) and len(col) == 6


def test_relaxed_transitive_input():
    T = shuffled_transitive(512, 1)
    col = acyclic_coloring(T, schedule_for(4, RELAXED, Fraction(1, 4)))
    assert verify_coloring(T, col) and len(col) < 256
    assert all(acyclic_by_sort(T, c) for c in col.classes)
    assert sorted(np.concatenate(col.classes).tolist()) == list(range(512))


def test_random_relaxed_colors_or_finds_path():
    T = random_tournament(1024, 0)
    try:
        col = acyclic_coloring(T, schedule_for(8, RELAXED, Fraction(1, 4)))
    except PatternWitness:
        return
    assert verify_coloring(T, col) and len(col) <= 512


@pytest.mark.parametrize("classes, ok", [
    ([[0, 1], [2]], True),
    ([[0, 1, 2]], False),        # the 3-cycle
    ([[0, 1]], False),           # vertex 2 missing
    ([[0, 1], [1, 2]], False),   # overlap
    ([[0, 1], []], False),
])
def test_verify_coloring(c3, classes, ok):
    assert verify_coloring(c3, Coloring.from_classes(classes)) is ok

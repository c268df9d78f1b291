from fractions import Fraction

import numpy as np
import pytest

from pathfree.core import transitive_tournament
from pathfree.errors import DegenerateSize, PatternWitness, PreconditionError
from pathfree.extract import PatternState, Trace, create_sequence, make_dense_pair
from pathfree.generators import random_tournament, shuffled_transitive, substitution_product
from pathfree.patterns import check_pk_witness, path_tournament
from pathfree.schedule import RELAXED, STRICT, schedule_for

from conftest import is_path_copy


def _relaxed(k, lam):
    return schedule_for(k, RELAXED, Fraction(lam))


def test_transitive_dense_pair():
    T = transitive_tournament(64)
    parts = [np.arange(i * 16, (i + 1) * 16) for i in range(4)]
    pair = make_dense_pair(T, PatternState(parts, path_tournament(4), 64), _relaxed(4, "1/8"))
    assert len(pair.X) == len(pair.Y) == pair.m == 16
    assert pair.density.value == 1
    # every X vertex beats every Y vertex, checked directly
    assert T.adj[np.ix_(pair.X, pair.Y)].all()


def test_p4_singletons_are_degenerate():
    T = path_tournament(4)
    parts = [[0], [1], [2], [3]]
    with pytest.raises(DegenerateSize):
        make_dense_pair(T, PatternState(parts, path_tournament(4), 4), _relaxed(4, "1/4"))


def test_random_4096_sequence_or_witness():
    T = random_tournament(4096, 1)
    sched = _relaxed(4, "1/10")
    try:
        seq = create_sequence(4, T, np.arange(4096), sched)
    except PatternWitness as w:
        assert check_pk_witness(T, w.vertices) and is_path_copy(T, w.vertices)
    else:
        assert len(set(seq.sizes())) == 1 and len(seq) == 4


def test_witness_when_pattern_embeds():
    # a blow-up of P_4 embeds P_4 at once
    T = path_tournament(4)
    B = substitution_product(T, transitive_tournament(64))
    parts = [np.arange(i * 64, (i + 1) * 64) for i in range(4)]
    with pytest.raises(PatternWitness) as info:
        make_dense_pair(B, PatternState(parts, path_tournament(4), 256), _relaxed(4, "1/4"))
    assert is_path_copy(B, info.value.vertices)


@pytest.mark.parametrize("lam", ["1/4", "1/10"])
@pytest.mark.parametrize("seed", range(4))
def test_sequence_on_transitive(lam, seed):
    T = shuffled_transitive(2048, seed)
    trace = Trace(record=True)
    sched = _relaxed(4, lam)
    seq = create_sequence(4, T, np.arange(2048), sched, trace)
    assert len(seq) == 4 and len(set(seq.sizes())) == 1
    for p in trace.dense_pairs:
        assert len(p.X) == len(p.Y) == p.m
        assert T.adj[np.ix_(p.X, p.Y)].sum() * 1 >= (1 - Fraction(lam)) * p.m * p.m


def test_strict_mode_degenerates_at_desk_scale():
    T = shuffled_transitive(256, 0)
    with pytest.raises(DegenerateSize):
        create_sequence(4, T, np.arange(256), schedule_for(4, STRICT))


def test_sequence_length_check():
    T = transitive_tournament(16)
    with pytest.raises(PreconditionError):
        create_sequence(3, T, np.arange(16), _relaxed(4, "1/4"))


def test_pattern_state_checks():
    with pytest.raises(PreconditionError):
        PatternState([[0], [1]], path_tournament(4), 2)
    with pytest.raises(PreconditionError):
        PatternState([[0], [], [2], [3]], path_tournament(4), 4)

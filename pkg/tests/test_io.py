import pytest

from pathfree.errors import MalformedInput
from pathfree.io import parse_sets, parse_tournament, parse_vertex_list


def test_parse_with_comments():
    T = parse_tournament("# c3\n3\n010\n001\n100\n")
    assert T.edges() == [(0, 1), (1, 2), (2, 0)]


@pytest.mark.parametrize("text, where", [
    ("", None),
    ("x\n", "line 1"),
    ("2\n01\n", "rows"),
    ("2\n0a\n10\n", "column 2"),
    ("2\n011\n10\n", "line 2"),
    ("2\n00\n00\n", None),
])
def test_malformed(text, where):
    with pytest.raises(MalformedInput) as info:
        parse_tournament(text)
    if where:
        assert where in str(info.value)


def test_lists():
    assert parse_vertex_list("3 1, 2") == [3, 1, 2]
    assert parse_sets("0 1\n\n2\n") == [[0, 1], [2]]

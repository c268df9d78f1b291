"""Text formats: tournament matrices and vertex-set lists."""
import hashlib

import numpy as np

from .core import Tournament
from .errors import MalformedInput


def parse_tournament(text):
    """Parse the matrix format: a line with ``n`` then ``n`` rows of ``0``/``1``.

    Lines starting with ``#`` and blank lines are skipped. Errors name the
    1-based line and column.
    """
    rows = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise MalformedInput(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 0:
                raise MalformedInput(f"line {lineno}: negative vertex count")
            continue
        if len(rows) == n:
            raise MalformedInput(f"line {lineno}: more than {n} matrix rows")
        if len(line) != n:
            raise MalformedInput(f"line {lineno}: row has {len(line)} characters, expected {n}")
        for col, ch in enumerate(line, 1):
            if ch not in "01":
                raise MalformedInput(f"line {lineno}, column {col}: unexpected character {ch!r}")
        rows.append((lineno, line))
    if n is None:
        raise MalformedInput("empty input: missing vertex count")
    if len(rows) != n:
        raise MalformedInput(f"expected {n} matrix rows, found {len(rows)}")
    adj = np.zeros((n, n), dtype=np.uint8)
    for i, (_, line) in enumerate(rows):
        adj[i] = np.frombuffer(line.encode(), dtype=np.uint8) - ord("0")
    for i, (lineno, _) in enumerate(rows):
        if adj[i, i]:
            raise MalformedInput(f"line {lineno}, column {i + 1}: diagonal must be 0")
    clash = np.argwhere((adj == adj.T) & ~np.eye(n, dtype=bool))
    if len(clash):
        i, j = map(int, clash[0])
        what = "both" if adj[i, j] else "neither"
        raise MalformedInput(
            f"line {rows[i][0]}, column {j + 1}: pair {{{i}, {j}}} has {what} orientation")
    return Tournament(adj, validate=False)


def format_tournament(T, comment=None):
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(str(T.n))
    lines += ["".join("1" if x else "0" for x in row) for row in T.adj]
    return "\n".join(lines) + "\n"


def digest(T):
    return hashlib.sha256(format_tournament(T).encode()).hexdigest()


def parse_vertex_list(text):
    """``"0,3,5"`` or ``"0 3 5"`` -> ``[0, 3, 5]``."""
    parts = text.replace(",", " ").split()
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise MalformedInput(f"bad vertex list {text!r}") from e


def parse_sets(text):
    """One vertex set per non-comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_vertex_list(line))
        except MalformedInput:
            raise MalformedInput(f"line {lineno}: bad vertex list {line!r}") from None
    return out

"""Numpy implementations of the adjacency scans (fallback backend)."""
import numpy as np


def row_counts(adj, rows, cols):
    if len(rows) == 0:
        return np.zeros(0, dtype=np.int64)
    return adj[np.ix_(rows, cols)].sum(axis=1, dtype=np.int64)


def col_counts(adj, rows, cols):
    if len(cols) == 0:
        return np.zeros(0, dtype=np.int64)
    return adj[np.ix_(rows, cols)].sum(axis=0, dtype=np.int64)


def edge_count(adj, rows, cols):
    if len(rows) == 0 or len(cols) == 0:
        return 0
    return int(adj[np.ix_(rows, cols)].sum(dtype=np.int64))


def first_edge(adj, rows, cols):
    if len(rows) == 0 or len(cols) == 0:
        return -1, -1
    # scan in row blocks so an early hit does not pay for the whole block
    step = max(1, 65536 // len(cols))
    for lo in range(0, len(rows), step):
        block = adj[np.ix_(rows[lo:lo + step], cols)]
        flat = int(block.argmax())
        i, j = divmod(flat, len(cols))
        if block[i, j]:
            return lo + i, j
    return -1, -1


def select_out(adj, v, cols, out):
    """Members of ``cols`` that ``v`` beats (``out``) or that beat ``v``."""
    row = adj[v, cols].astype(bool)
    keep = row if out else ~row
    keep &= cols != v
    return cols[keep]

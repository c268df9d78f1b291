"""Acyclic coloring by repeated transitive-set extraction."""
from dataclasses import dataclass

import numpy as np

from .core import find_triangle
from .errors import InvariantViolation
from .extract import Trace
from .findtrans import find_trans


@dataclass
class Coloring:
    classes: list
    color_of: dict

    def __len__(self):
        return len(self.classes)

    @classmethod
    def from_classes(cls, classes):
        classes = [np.asarray(c, dtype=np.int64) for c in classes]
        return cls(classes, {int(v): i for i, c in enumerate(classes) for v in c})


def acyclic_coloring(T, schedule, trace=None):
    """Partition ``T`` into transitive classes, extracting one class at a time."""
    trace = Trace() if trace is None else trace
    remaining = np.arange(T.n, dtype=np.int64)
    classes = []
    while len(remaining):
        cls_ = find_trans(T, schedule, remaining, trace).vertices
        if len(cls_) == 0:
            raise InvariantViolation("extraction returned nothing on a nonempty set")
        classes.append(cls_)
        remaining = np.setdiff1d(remaining, cls_, assume_unique=True)
    return Coloring.from_classes(classes)


def verify_coloring(T, coloring):
    """Classes are disjoint, cover every vertex and are each transitive."""
    classes = coloring.classes if isinstance(coloring, Coloring) else coloring
    seen = np.zeros(T.n, dtype=bool)
    for c in classes:
        c = np.asarray(c, dtype=np.int64)
        if len(c) == 0 or c.min() < 0 or c.max() >= T.n:
            return False
        if seen[c].any() or len(np.unique(c)) != len(c):
            return False
        seen[c] = True
        if find_triangle(T, c) is not None:
            return False
    return bool(seen.all())

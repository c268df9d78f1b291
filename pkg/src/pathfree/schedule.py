"""Numeric parameters of the extraction pipeline for a given ``k``.

Strict mode uses the proven constants (``lambda = 1/(32 k^4)``); relaxed
mode substitutes a user ``lambda`` and takes set sizes from the sets the
algorithm actually holds, so the non-trivial branches run at desk scale.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
import math

STRICT = "strict"
RELAXED = "relaxed"


def next_power_of_two(x):
    return 1 << (max(1, x) - 1).bit_length()


def parse_rational(text):
    """Parse ``"p/q"`` or an integer; decimal floats are rejected."""
    text = str(text).strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"rationals must be written p/q, got {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class ConstantSchedule:
    k: int
    k_user: int
    mode: str
    lam: Fraction

    @property
    def strict(self):
        return self.mode == STRICT

    @property
    def log_k(self):
        return self.k.bit_length() - 1

    @cached_property
    def lam_k(self):
        return 4 * self.lam * self.k ** 2

    @cached_property
    def lam_f(self):
        return 4 * self.k * self.lam_k

    @cached_property
    def c(self):
        return self.lam ** self.k / self.k ** 2

    def c_r(self, r):
        """Relative element size of a length-``r`` sequence from the sequence builder."""
        return self.c * (self.c / 2) ** (r.bit_length() - 2)

    def lambda_r(self, r):
        return self.lam if r == 2 else 4 * self.lam * r * r

    @cached_property
    def c_k(self):
        """Trivial-size constant of the extractor: ``(1/k) c^(log k + 1)``."""
        return self.c ** (self.log_k + 1) / self.k

    @cached_property
    def c_k_sequence(self):
        """Element-size constant of a length-``k`` sequence, ``c (c/2)^(log k - 1)``."""
        return self.c_r(self.k)

    def trivial(self, n):
        """Whether an ``n``-vertex input gets the two-vertex answer."""
        if self.strict:
            return n * self.c_k <= self.k
        return n <= self.k

    def dense_pair_size(self, n):
        return math.floor(self.c * n)

    def sequence_size(self, r, n):
        return math.floor(self.c * n / 2 * self.c_r(r // 2))


def schedule_for(k_user, mode=STRICT, lam=None):
    if k_user < 3:
        raise ValueError("k must be at least 3")
    k = next_power_of_two(max(k_user, 4))
    if mode == STRICT:
        if lam is not None:
            raise ValueError("strict mode fixes lambda")
        lam = Fraction(1, 32 * k ** 4)
    elif mode == RELAXED:
        if lam is None:
            raise ValueError("relaxed mode needs lambda")
        lam = Fraction(lam)
        if not 0 < lam < Fraction(1, 2):
            raise ValueError("relaxed lambda must lie in (0, 1/2)")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    sched = ConstantSchedule(k, k_user, mode, lam)
    if mode == STRICT:
        assert sched.lam_f <= Fraction(1, 2 * k)
        for q in (sched.lam, sched.lam_k, sched.lam_f, sched.c, sched.c_k):
            assert 0 < q < 1
    return sched

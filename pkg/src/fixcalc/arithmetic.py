"""
Deficient, perfect and abundant numbers as the proper pre-fixed, fixed and
proper post-fixed points of ``sd``, the sum of a number's smaller divisors,
on the positive integers under their usual order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DomainError

SD_MAX = 10**12
ENUMERATE_MAX = 10**7
SIEVE_THRESHOLD = 10**5


class NumberClass(str, enum.Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DivisorProfile:
    n: int
    proper_divisors: tuple[int, ...]

    @property
    def sd(self) -> int:
        return sum(self.proper_divisors)


def _check_positive(p, upper, what="p"):
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise DomainError(f"{what} must be an integer, got {p!r}")
    if not 1 <= p <= upper:
        raise DomainError(f"{what} must be in 1..{upper}, got {p}")


def divisor_profile(p: int) -> DivisorProfile:
    _check_positive(p, SD_MAX)
    small, large = [], []
    for d in range(1, isqrt(p) + 1):
        if p % d == 0:
            small.append(d)
            if d != p // d:
                large.append(p // d)
    divisors = small + large[::-1]
    return DivisorProfile(p, tuple(divisors[:-1]))


def sd(p: int) -> int:
    """Sum of the divisors of ``p`` smaller than ``p``; ``sd(1) == 0``."""
    _check_positive(p, SD_MAX)
    total = 0
    for d in range(1, isqrt(p) + 1):
        if p % d == 0:
            total += d
            q = p // d
            if q != d:
                total += q
    return total - p


def classify_number(p: int) -> NumberClass:
    s = sd(p)
    if s < p:
        return NumberClass.DEFICIENT
    if s == p:
        return NumberClass.PERFECT
    return NumberClass.ABUNDANT


def sd_table(limit: int) -> np.ndarray:
    """``sd`` for ``0..limit`` as an int64 array (index 0 is unused and 0).

    Trial division per number up to :data:`SIEVE_THRESHOLD`; above that a
    divisor-pair sieve that touches each pair ``(d, n/d)`` with ``d <= n/d``
    once.
    """
    _check_positive(limit, ENUMERATE_MAX, "limit")
    if limit <= SIEVE_THRESHOLD:
        return np.array([0] + [sd(n) for n in range(1, limit + 1)], dtype=np.int64)
    sigma = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, isqrt(limit) + 1):
        multiples = np.arange(d * d, limit + 1, d, dtype=np.int64)
        cofactors = multiples // d
        sigma[multiples] += d
        mask = cofactors != d
        sigma[multiples[mask]] += cofactors[mask]
    sigma -= np.arange(limit + 1, dtype=np.int64)
    return sigma


@dataclass(frozen=True)
class ClassCensus:
    limit: int
    counts: dict
    perfect: tuple[int, ...]


def enumerate_classes(limit: int) -> ClassCensus:
    sds = sd_table(limit)
    ns = np.arange(limit + 1, dtype=np.int64)
    deficient = int(np.count_nonzero(sds[1:] < ns[1:]))
    abundant = int(np.count_nonzero(sds[1:] > ns[1:]))
    perfect = tuple(int(n) for n in np.flatnonzero(sds == ns) if n >= 1)
    counts = {
        NumberClass.DEFICIENT: deficient,
        NumberClass.PERFECT: len(perfect),
        NumberClass.ABUNDANT: abundant,
    }
    return ClassCensus(limit, counts, perfect)


def class_rows(limit: int):
    """Yield ``(n, sd(n), class)`` for ``1..limit``."""
    sds = sd_table(limit)
    for n in range(1, limit + 1):
        s = int(sds[n])
        cls = NumberClass.DEFICIENT if s < n else NumberClass.PERFECT if s == n else NumberClass.ABUNDANT
        yield n, s, cls

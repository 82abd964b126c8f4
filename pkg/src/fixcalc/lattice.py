"""
Finite powerset lattices.

A :class:`Universe` of size ``n`` is the carrier ``{0, ..., n-1}``; its
subsets, ordered by inclusion, form a complete lattice.  A :class:`Subset`
stores its members as an ``n``-bit characteristic vector, so ordering,
join, meet and complement are single integer operations.

Subsets render as ``{a,b,c}`` with ascending members and ``{}`` for the
empty set.  The same grammar is accepted by :func:`parse_subset`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import SizeCapError, SubsetSyntaxError, UniverseMismatchError

MAX_SIZE = 63
MAX_ENUMERATION_SIZE = 20


@dataclass(frozen=True)
class Universe:
    size: int
    label: str = field(default="")

    def __post_init__(self):
        if not isinstance(self.size, int) or isinstance(self.size, bool):
            raise TypeError("universe size must be an int")
        if not 1 <= self.size <= MAX_SIZE:
            raise SizeCapError(f"universe size must be in 1..{MAX_SIZE}, got {self.size}")
        if not self.label:
            object.__setattr__(self, "label", f"U{self.size}")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def subset(self, members: Iterable[int]) -> Subset:
        return Subset.of(self, members)

    def parse(self, text: str) -> Subset:
        return parse_subset(self, text)

    def require_enumerable(self, cap: int = MAX_ENUMERATION_SIZE) -> None:
        if self.size > cap:
            raise SizeCapError(
                f"{self.label} has size {self.size}; this operation enumerates "
                f"all subsets and is capped at size {cap}"
            )


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.universe.label}")

    @classmethod
    def of(cls, universe: Universe, members: Iterable[int]) -> Subset:
        mask = 0
        for m in members:
            if not 0 <= m < universe.size:
                raise ValueError(f"{m} is not in the carrier of {universe.label}")
            mask |= 1 << m
        return cls(universe, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, atom: int) -> bool:
        return 0 <= atom < self.universe.size and bool(self.mask >> atom & 1)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def __repr__(self) -> str:
        return f"Subset({self.universe.label}, {self})"

    def __le__(self, other: Subset) -> bool:
        return leq(self, other)

    def __ge__(self, other: Subset) -> bool:
        return leq(other, self)

    def __or__(self, other: Subset) -> Subset:
        return join(self, other)

    def __and__(self, other: Subset) -> Subset:
        return meet(self, other)

    def __sub__(self, other: Subset) -> Subset:
        return meet(self, complement(other))

    def __invert__(self) -> Subset:
        return complement(self)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _check_same(a: Subset, b: Subset) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError(
            f"subsets belong to different universes ({a.universe.label} vs {b.universe.label})"
        )


def complement(s: Subset) -> Subset:
    return Subset(s.universe, s.universe.full_mask ^ s.mask)


def leq(a: Subset, b: Subset) -> bool:
    """Inclusion order: ``a`` is a subset of ``b``."""
    _check_same(a, b)
    return a.mask & ~b.mask == 0


def join(a: Subset, b: Subset) -> Subset:
    _check_same(a, b)
    return Subset(a.universe, a.mask | b.mask)


def meet(a: Subset, b: Subset) -> Subset:
    _check_same(a, b)
    return Subset(a.universe, a.mask & b.mask)


def enumerate_subsets(u: Universe) -> Iterator[Subset]:
    """All ``2**n`` subsets, ascending by characteristic-vector value.

    Bit ``i`` of the vector is atom ``i``, so over ``U2`` the order is
    ``{}, {0}, {1}, {0,1}``.
    """
    u.require_enumerable()
    return (Subset(u, m) for m in range(1 << u.size))


_SUBSET_RE = re.compile(r"^\s*\{\s*(.*?)\s*\}\s*$")


def parse_subset(u: Universe, text: str) -> Subset:
    m = _SUBSET_RE.match(text)
    if not m:
        raise SubsetSyntaxError(f"expected a subset literal like {{0,2}}, got {text!r}")
    body = m.group(1)
    if not body:
        return u.empty()
    members = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise SubsetSyntaxError(f"bad subset member {tok!r} in {text!r}")
        members.append(int(tok))
    try:
        return Subset.of(u, members)
    except ValueError as exc:
        raise SubsetSyntaxError(str(exc)) from None

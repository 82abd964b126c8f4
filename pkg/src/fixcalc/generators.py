"""
Set-to-set operators on a finite powerset lattice.

Rules are applied to characteristic-vector masks internally; callers pass
and receive :class:`~fixcalc.lattice.Subset` values.  Whether a generator is
monotone is never taken on trust: :func:`verify_monotone` checks it and
caches the verdict on the generator.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, Optional

from .errors import MissingEntryError, SizeCapError, SubsetSyntaxError, UniverseMismatchError
from .lattice import Subset, Universe, parse_subset

EXHAUSTIVE_MONOTONE_CAP = 12
DEFAULT_SAMPLES = 10_000


class Generator:
    """A named endofunction on the subsets of ``universe``."""

    def __init__(self, name: str, universe: Universe, mask_rule: Callable[[int], int],
                 monotone_claimed: bool = False):
        self.name = name
        self.universe = universe
        self.monotone_claimed = monotone_claimed
        self._mask_rule = mask_rule
        self._verdict: Optional[MonotonicityVerdict] = None

    @classmethod
    def from_rule(cls, name: str, universe: Universe, rule: Callable[[Subset], Subset],
                  monotone_claimed: bool = False) -> Generator:
        def mask_rule(mask):
            out = rule(Subset(universe, mask))
            if out.universe != universe:
                raise ValueError(f"rule {name!r} left universe {universe.label}")
            return out.mask
        return cls(name, universe, mask_rule, monotone_claimed)

    def apply_mask(self, mask: int) -> int:
        out = self._mask_rule(mask)
        if out & ~self.universe.full_mask:
            raise ValueError(f"generator {self.name!r} produced atoms outside {self.universe.label}")
        return out

    def __call__(self, x: Subset) -> Subset:
        if x.universe != self.universe:
            raise UniverseMismatchError(
                f"generator {self.name!r} acts on {self.universe.label}, got a subset of {x.universe.label}"
            )
        return Subset(self.universe, self.apply_mask(x.mask))

    def __repr__(self):
        return f"Generator({self.name!r}, {self.universe.label})"


@dataclass(frozen=True)
class MonotonicityVerdict:
    mode: str  # "exhaustive" or "sampled"
    holds: bool
    counterexample: Optional[tuple[Subset, Subset]]
    pairs_checked: int


def peano_successor(u: Universe) -> Generator:
    """``F(X) = {0} | {x+1 : x in X}``, dropping successors past the top atom."""
    full = u.full_mask
    return Generator("peano", u, lambda m: 1 | ((m << 1) & full), monotone_claimed=True)


def identity(u: Universe) -> Generator:
    return Generator("identity", u, lambda m: m, monotone_claimed=True)


def constant(value: Subset) -> Generator:
    v = value.mask
    return Generator(f"constant:{value}", value.universe, lambda m: v, monotone_claimed=True)


def intersect_with(s: Subset) -> Generator:
    """``F(X) = X & s``."""
    v = s.mask
    return Generator(f"meet:{s}", s.universe, lambda m: m & v, monotone_claimed=True)


def table_generator(u: Universe, entries: Mapping[Subset, Subset],
                    default: Optional[Callable[[Subset], Subset]] = None,
                    name: str = "table") -> Generator:
    """Generator defined by an explicit lookup table.

    A subset missing from ``entries`` is passed to ``default``; without one,
    applying the generator to it raises :class:`MissingEntryError`.
    """
    table = {}
    for k, v in entries.items():
        if k.universe != u or v.universe != u:
            raise ValueError(f"table entry {k} -> {v} is not over {u.label}")
        table[k.mask] = v.mask

    def rule(mask):
        try:
            return table[mask]
        except KeyError:
            if default is None:
                raise MissingEntryError(
                    f"table generator {name!r} has no entry for {Subset(u, mask)}"
                ) from None
            return default(Subset(u, mask)).mask

    return Generator(name, u, rule)


def parse_table(u: Universe, text: str) -> dict[Subset, Subset]:
    """Read ``{..} -> {..}`` lines; ``#`` starts a comment line."""
    entries = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lhs, sep, rhs = line.partition("->")
        if not sep:
            raise SubsetSyntaxError(f"line {lineno}: expected '{{..}} -> {{..}}', got {line!r}")
        try:
            key, value = parse_subset(u, lhs), parse_subset(u, rhs)
        except SubsetSyntaxError as exc:
            raise SubsetSyntaxError(f"line {lineno}: {exc}") from None
        if key in entries and entries[key] != value:
            raise SubsetSyntaxError(f"line {lineno}: conflicting entry for {key}")
        entries[key] = value
    return entries


def load_table(u: Universe, path) -> Generator:
    path = Path(path)
    return table_generator(u, parse_table(u, path.read_text(encoding="utf-8")),
                           name=f"table:{path.name}")


def additive_random_generator(u: Universe, seed: int) -> Generator:
    """Seeded random generator of the form ``F(X) = B | union(h(x) for x in X)``.

    Every such ``F`` is monotone.  ``B`` takes each atom with probability
    1/4 and each ``h(x)`` takes each atom with probability ``min(1, 1.5/n)``,
    sparse enough that least and greatest fixed points usually differ.
    """
    rng = random.Random(seed)
    n = u.size
    base = sum(1 << a for a in range(n) if rng.random() < 0.25)
    p = min(1.0, 1.5 / n)
    images = [sum(1 << a for a in range(n) if rng.random() < p) for _ in range(n)]

    def rule(mask):
        out = base
        i = 0
        while mask:
            if mask & 1:
                out |= images[i]
            mask >>= 1
            i += 1
        return out

    return Generator(f"additive:{seed}", u, rule, monotone_claimed=True)


def dual(g: Generator) -> Generator:
    """The complement-conjugate ``X -> ~g(~X)``."""
    full = g.universe.full_mask
    return Generator(g.name + "^δ", g.universe,
                     lambda m: full ^ g.apply_mask(full ^ m),
                     monotone_claimed=g.monotone_claimed)


def is_monotone(g: Generator, mode: str = "exhaustive", k: int = DEFAULT_SAMPLES,
                seed: int = 0) -> MonotonicityVerdict:
    """Check ``X <= Y`` implies ``g(X) <= g(Y)``.

    Exhaustive mode visits all ``3**n`` comparable pairs and is capped at
    size 12.  Sampled mode draws ``k`` pairs by picking ``X`` uniformly and
    then ``Y`` uniformly among the supersets of ``X``.
    """
    u = g.universe
    if mode == "exhaustive":
        if u.size > EXHAUSTIVE_MONOTONE_CAP:
            raise SizeCapError(
                f"exhaustive monotonicity check is capped at size {EXHAUSTIVE_MONOTONE_CAP}, "
                f"{u.label} has size {u.size}"
            )
        images = [g.apply_mask(m) for m in range(1 << u.size)]
        checked = 0
        for y, fy in enumerate(images):
            x = y
            while True:
                checked += 1
                if images[x] & ~fy:
                    return MonotonicityVerdict(mode, False, (Subset(u, x), Subset(u, y)), checked)
                if x == 0:
                    break
                x = (x - 1) & y
        return MonotonicityVerdict(mode, True, None, checked)
    if mode == "sampled":
        rng = random.Random(seed)
        for i in range(k):
            x = rng.getrandbits(u.size)
            y = x | rng.getrandbits(u.size)
            if g.apply_mask(x) & ~g.apply_mask(y):
                return MonotonicityVerdict(mode, False, (Subset(u, x), Subset(u, y)), i + 1)
        return MonotonicityVerdict(mode, True, None, k)
    raise ValueError(f"unknown monotonicity mode {mode!r}")


def verify_monotone(g: Generator) -> MonotonicityVerdict:
    """Cached monotonicity verdict: exhaustive up to size 12, sampled above."""
    if g._verdict is None:
        mode = "exhaustive" if g.universe.size <= EXHAUSTIVE_MONOTONE_CAP else "sampled"
        g._verdict = is_monotone(g, mode)
    return g._verdict

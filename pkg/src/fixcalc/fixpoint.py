"""
Least and greatest fixed points of generators.

Two independent routes compute each extremal fixed point:

* Kleene iteration (:func:`lfp_iterate`, :func:`gfp_iterate`) climbs from
  the bottom, or descends from the top, until the iterate stops moving.
* The Knaster-Tarski characterisation (:func:`knaster_tarski_lfp_bruteforce`,
  :func:`knaster_tarski_gfp_bruteforce`) enumerates every subset and
  intersects the closed ones, or unions the consistent ones.

The iterative routes refuse generators that fail :func:`verify_monotone`
unless ``override=True`` is passed, in which case a ``2**n + 1`` step cap
applies.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, TypeVar

from .errors import FixcalcError, NonConvergenceError, NotMonotoneError, UniverseMismatchError
from .generators import Generator, verify_monotone
from .lattice import Subset, enumerate_subsets

BRUTEFORCE_CAP = 12

T = TypeVar("T")


class PointClass(str, enum.Enum):
    PROPER_PRE_FIXED = "proper-pre-fixed"
    PROPER_POST_FIXED = "proper-post-fixed"
    FIXED = "fixed"
    NEITHER = "neither"

    def __str__(self):
        return self.value


class Partition(NamedTuple):
    mu: Subset
    nu_minus_mu: Subset
    outside: Subset


@dataclass(frozen=True)
class FixpointReport:
    generator_name: str
    lfp: Subset
    gfp: Subset
    lfp_trace: tuple[Subset, ...]
    gfp_trace: tuple[Subset, ...]
    partition: Partition


@dataclass(frozen=True)
class InductionCheck:
    property_set: Subset
    base_holds: bool
    closed_holds: bool
    conclusion_holds: bool
    counterexample: Optional[int] = None


def classify_by_order(x: T, fx: T, leq: Callable[[T, T], bool]) -> PointClass:
    """Place ``x`` in the pre/post/fixed taxonomy given ``fx`` and an order."""
    below = leq(fx, x)
    above = leq(x, fx)
    if below and above:
        return PointClass.FIXED
    if below:
        return PointClass.PROPER_PRE_FIXED
    if above:
        return PointClass.PROPER_POST_FIXED
    return PointClass.NEITHER


def require_monotone(g: Generator) -> None:
    verdict = verify_monotone(g)
    if not verdict.holds:
        x, y = verdict.counterexample
        raise NotMonotoneError(
            f"generator {g.name!r} is not monotone: {x} <= {y} but "
            f"F({x}) = {g(x)} is not below F({y}) = {g(y)}",
            verdict,
        )


def _iterate(g: Generator, start: int, override: bool) -> tuple[Subset, ...]:
    u = g.universe
    if override:
        cap = (1 << u.size) + 1
    else:
        require_monotone(g)
        # a monotone chain in a lattice of height n moves at most n times
        cap = u.size + 1
    trace = [start]
    x = start
    for _ in range(cap):
        nxt = g.apply_mask(x)
        trace.append(nxt)
        if nxt == x:
            return tuple(Subset(u, m) for m in trace)
        x = nxt
    raise NonConvergenceError(
        f"iteration of {g.name!r} did not stabilise within {cap} steps",
        [Subset(u, m) for m in trace],
    )


def lfp_iterate(g: Generator, override: bool = False) -> tuple[Subset, tuple[Subset, ...]]:
    """Least fixed point by iterating from the empty set.

    Returns ``(lfp, trace)``; the trace starts at ``{}`` and ends with the
    fixed point repeated once, the check that confirmed stability.
    """
    trace = _iterate(g, 0, override)
    return trace[-1], trace


def gfp_iterate(g: Generator, override: bool = False) -> tuple[Subset, tuple[Subset, ...]]:
    """Greatest fixed point by iterating down from the full universe."""
    trace = _iterate(g, g.universe.full_mask, override)
    return trace[-1], trace


def _all_images(g: Generator) -> list[int]:
    g.universe.require_enumerable(BRUTEFORCE_CAP)
    return [g.apply_mask(m) for m in range(1 << g.universe.size)]


def knaster_tarski_lfp_bruteforce(g: Generator) -> Subset:
    """Intersection of every ``X`` with ``g(X) <= X``."""
    images = _all_images(g)
    acc = g.universe.full_mask
    for x, fx in enumerate(images):
        if fx & ~x == 0:
            acc &= x
    return Subset(g.universe, acc)


def knaster_tarski_gfp_bruteforce(g: Generator) -> Subset:
    """Union of every ``X`` with ``X <= g(X)``."""
    images = _all_images(g)
    acc = 0
    for x, fx in enumerate(images):
        if x & ~fx == 0:
            acc |= x
    return Subset(g.universe, acc)


def classify_subset(g: Generator, x: Subset) -> PointClass:
    return classify_by_order(x, g(x), Subset.__le__)


def classify_all(g: Generator) -> tuple[list[tuple[Subset, PointClass]], dict[PointClass, int]]:
    """Every subset with its class, in enumeration order, plus per-class counts."""
    g.universe.require_enumerable(BRUTEFORCE_CAP)
    rows = [(x, classify_subset(g, x)) for x in enumerate_subsets(g.universe)]
    tally = Counter(cls for _, cls in rows)
    return rows, {cls: tally.get(cls, 0) for cls in PointClass}


def partition_universe(g: Generator, override: bool = False) -> Partition:
    """Split the universe into ``lfp``, ``gfp - lfp`` and ``U - gfp``."""
    mu, _ = lfp_iterate(g, override)
    nu, _ = gfp_iterate(g, override)
    return _partition(g, mu, nu)


def _partition(g: Generator, mu: Subset, nu: Subset) -> Partition:
    if not mu <= nu:
        raise FixcalcError(
            f"least fixed point {mu} of {g.name!r} is not below greatest {nu}; no partition"
        )
    return Partition(mu, nu - mu, ~nu)


def fixpoint_report(g: Generator, override: bool = False) -> FixpointReport:
    mu, lfp_trace = lfp_iterate(g, override)
    nu, gfp_trace = gfp_iterate(g, override)
    return FixpointReport(g.name, mu, nu, lfp_trace, gfp_trace, _partition(g, mu, nu))


def _check_universe(g: Generator, p: Subset) -> None:
    if p.universe != g.universe:
        raise UniverseMismatchError(
            f"{p} is over {p.universe.label} but {g.name!r} acts on {g.universe.label}"
        )


def check_closed(g: Generator, p: Subset) -> bool:
    """``g(p) <= p``: ``p`` is a pre-fixed point."""
    _check_universe(g, p)
    return g(p) <= p


def check_consistent(g: Generator, p: Subset) -> bool:
    """``p <= g(p)``: ``p`` is a post-fixed point."""
    _check_universe(g, p)
    return p <= g(p)


def prove_by_induction(g: Generator, p: Subset) -> InductionCheck:
    """Discharge the induction obligations for ``p`` and check the conclusion.

    The conclusion ``lfp <= p`` is computed separately from the
    obligations, so a closed ``p`` that nonetheless misses part of the
    least fixed point would show up as an inconsistency.
    """
    _check_universe(g, p)
    require_monotone(g)
    base = g(g.universe.empty()) <= p
    closed = check_closed(g, p)
    mu, _ = lfp_iterate(g)
    missing = mu - p
    return InductionCheck(
        property_set=p,
        base_holds=base,
        closed_holds=closed,
        conclusion_holds=not missing.mask,
        counterexample=missing.members[0] if missing.mask else None,
    )

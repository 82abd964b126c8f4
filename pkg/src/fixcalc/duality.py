"""
The greatest fixed point of ``F`` as the complement of the least fixed
point of its dual ``X -> ~F(~X)``.

The elements of that least fixed point are the *rejected* elements: each
has a finite derivation, under the dual, of why it cannot belong to the
greatest fixed point of ``F``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fixpoint import require_monotone, gfp_iterate, lfp_iterate
from .generators import Generator, dual
from .lattice import Subset, complement


@dataclass(frozen=True)
class DualityReport:
    generator_name: str
    gfp_direct: Subset
    rejected: Subset
    gfp_via_duality: Subset

    @property
    def agrees(self) -> bool:
        return self.gfp_direct == self.gfp_via_duality


def rejected_elements(g: Generator) -> Subset:
    require_monotone(g)
    rejected, _ = lfp_iterate(dual(g))
    return rejected


def verify_duality(g: Generator) -> DualityReport:
    """Compute the greatest fixed point both ways and compare.

    The direct side iterates ``g`` downward from the top; the dual side
    builds a fresh dual generator, iterates it upward from the bottom and
    complements the result.  Non-monotone ``g`` is refused.
    """
    require_monotone(g)
    direct, _ = gfp_iterate(g)
    rejected = rejected_elements(g)
    return DualityReport(g.name, direct, rejected, complement(rejected))

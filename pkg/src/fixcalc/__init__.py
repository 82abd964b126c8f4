"""Fixed points on finite powerset lattices, the positive integers and the reals."""
from .duality import DualityReport, rejected_elements, verify_duality
from .errors import (
    ConvergenceError, DomainError, FixcalcError, MissingEntryError, NonConvergenceError,
    NotMonotoneError, SizeCapError, SubsetSyntaxError, UniverseMismatchError,
)
from .fixpoint import (
    FixpointReport, InductionCheck, Partition, PointClass, check_closed, check_consistent,
    classify_all, classify_by_order, classify_subset, fixpoint_report, gfp_iterate,
    knaster_tarski_gfp_bruteforce, knaster_tarski_lfp_bruteforce, lfp_iterate,
    partition_universe, prove_by_induction,
)
from .generators import (
    Generator, MonotonicityVerdict, additive_random_generator, constant, dual, identity,
    intersect_with, is_monotone, load_table, parse_table, peano_successor, table_generator,
    verify_monotone,
)
from .lattice import Subset, Universe, complement, enumerate_subsets, join, leq, meet, parse_subset

__version__ = "0.1.0"

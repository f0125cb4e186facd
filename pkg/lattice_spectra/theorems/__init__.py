"""Executable checkers for the characterization results on decomposable lattices

Each registry entry evaluates every side of a stated equivalence on a concrete
finite lattice and reports agreement or the failing instances.
"""

# Created:   18-Oct-2026

from lattice_spectra.theorems.context import LatticeContext, CheckerEntry, ConditionBlock
from lattice_spectra.theorems.registry import (REGISTRY, TheoremVerdict, VerdictRow, Counterexample, SweepReport,
                                               check, check_all, get_entry, parse_implication,
                                               search_counterexamples, sweep)

"""A python library for computing the ideal spectra of finite decomposable lattices and
checking their characterization theorems on concrete instances.
"""

#
# Created:  18-Oct-2026
# License:  BSD-3-Clause (New/Revised)
#

# Version number
__version__ = '0.2.0'


# lattice_spectra imports
import lattice_spectra.errors
import lattice_spectra.debug
from lattice_spectra.core import (Lattice, Poset, build_from_covers, build_from_leq, is_distributive,
                                  is_totally_ordered, join_irreducibles, set_max_lattice_size)
from lattice_spectra.ideals import Ideal, Filter, SpectrumReport, spectrum
from lattice_spectra.decomp import decompose_special, disjointify, is_decomposable
from lattice_spectra.gen import (catalog, downset_lattice, enumerate_distributive, enumerate_posets,
                                 random_distributive, set_max_poset_points)
from lattice_spectra.formats import load_lattice, parse_lattice
from lattice_spectra.theorems import REGISTRY, TheoremVerdict, check, check_all, search_counterexamples, sweep

"""Shared evaluation context and entry types for the theorem checkers
"""

# Created:   18-Oct-2026

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Tuple

import networkx as nx

import lattice_spectra.errors as errors
import lattice_spectra.ideals as ideals
from lattice_spectra.core import is_totally_ordered
from lattice_spectra.decomp import is_decomposable, is_projectable, is_strongly_projectable


# Largest number of subsets or chains a quantified domain may enumerate
DOMAIN_LIMIT = 50000

EQUIVALENCE = 'equivalence'
ASSERTION   = 'assertion'
IMPLICATION = 'implication'


@dataclass(frozen=True)
class ConditionBlock:
    """One quantified statement of a checker entry

    Attributes
    ----------
    tag : str
        Short name used in reports and implication ids, '' for the main statement
    domain : str
        What the statement quantifies over
    instances : callable
        ctx -> list of (description, object)
    conditions : tuple of (str, callable)
        Condition labels with evaluators (ctx, object) -> bool
    mode : str
        equivalence (all conditions agree), assertion (all hold) or implication (first implies second)
    """

    tag: str
    domain: str
    instances: Callable
    conditions: Tuple
    mode: str = EQUIVALENCE

    @property
    def labels(self):
        return [label for label, _ in self.conditions]


@dataclass(frozen=True)
class CheckerEntry:
    theorem_id: str
    title: str
    requires_decomposable: bool
    blocks: Tuple[ConditionBlock, ...]
    degenerate: bool = False
    note: str = field(default='')


def global_instance(ctx):
    return [('L', None)]


class LatticeContext:
    """Caches the spectra of one lattice across the checker entries run on it

    Attributes
    ----------
    lattice : Lattice
        The lattice under check
    options : dict
        Reading switches, currently 'chain_reading' ('values' or 'ideals')
    """

    def __init__(self, lattice, options=None):
        self.lattice = lattice
        self.options = dict(options or {})
        self._values_of = {}
        self._polars = {}
        self._s_p = {}


    def name(self, ideal):
        return ideals.ideal_label(self.lattice, ideal)


    def element(self, x):
        return self.lattice.labels[x]


    def subset_name(self, subset):
        return '{' + ','.join(self.lattice.labels[x] for x in sorted(subset)) + '}'


    @cached_property
    def ideals(self):
        return ideals.enumerate_ideals(self.lattice)


    @cached_property
    def proper_ideals(self):
        return [ideal for ideal in self.ideals if ideal.generator != self.lattice.top]


    @cached_property
    def nonzero_ideals(self):
        return [ideal for ideal in self.ideals if ideal.generator != 0]


    @cached_property
    def whole(self):
        return ideals.whole(self.lattice)


    @cached_property
    def zero(self):
        return ideals.zero_ideal(self.lattice)


    @cached_property
    def primes(self):
        return ideals.primes(self.lattice)


    @cached_property
    def min_primes(self):
        return ideals.min_primes(self.lattice)


    @cached_property
    def values(self):
        return ideals.regular_ideals(self.lattice)


    @cached_property
    def polar_ideals(self):
        return ideals.polar_ideals(self.lattice)


    @cached_property
    def ultrafilters(self):
        return ideals.ultrafilters(self.lattice)


    @cached_property
    def decomposition(self):
        return is_decomposable(self.lattice)


    @property
    def decomposable(self):
        return self.decomposition[0]


    @cached_property
    def strongly_projectable(self):
        return is_strongly_projectable(self.lattice)


    @cached_property
    def projectable(self):
        return is_projectable(self.lattice)


    @cached_property
    def totally_ordered(self):
        return is_totally_ordered(self.lattice)


    @cached_property
    def nonzero(self):
        return [x for x in self.lattice.elements if x != 0]


    def val(self, x):
        if x not in self._values_of:
            self._values_of[x] = ideals.values_of(self.lattice, x)
        return self._values_of[x]


    def polar(self, subset):
        key = frozenset(subset)
        if key not in self._polars:
            self._polars[key] = ideals.polar(self.lattice, key)
        return self._polars[key]


    def double_polar(self, subset):
        return self.polar(self.polar(subset).carrier)


    def s_p(self, prime):
        if prime not in self._s_p:
            self._s_p[prime] = ideals.s_p(self.lattice, prime)
        return self._s_p[prime]


    def join(self, first, second):
        return ideals.ideal_join(self.lattice, first, second)


    def intersect(self, family):
        return ideals.intersect_all(self.lattice, family)


    def comparable(self, first, second):
        return first.issubset(second) or second.issubset(first)


    def is_chain(self, items):
        return all(self.comparable(first, second) for first, second in combinations(items, 2))


    def _meet_closure(self, subset):
        closed = set(subset)
        grown = True
        while grown:
            grown = False
            for a, b in combinations(sorted(closed), 2):
                m = int(self.lattice.meet[a, b])
                if m not in closed:
                    closed.add(m)
                    grown = True
        return frozenset(closed)


    @cached_property
    def meet_closed_subsets(self):
        """Nonempty meet-closed subsets avoiding 0, ordered by size then elements

        Raises
        ------
        CapExceededError
            More than DOMAIN_LIMIT such subsets
        """

        seen = set()
        stack = [frozenset()]
        while stack:
            current = stack.pop()
            for x in self.nonzero:
                if x in current:
                    continue
                candidate = self._meet_closure(current | {x})
                if 0 in candidate or candidate in seen:
                    continue
                seen.add(candidate)
                stack.append(candidate)
                if len(seen) > DOMAIN_LIMIT:
                    raise errors.CapExceededError('More than {} meet-closed subsets in {}'.format(DOMAIN_LIMIT, self.lattice.name))
        return sorted(seen, key=lambda s: (len(s), sorted(s)))


    @cached_property
    def prime_chains(self):
        """Nonempty chains of primes, each listed from the smallest prime up
        """

        ordered = sorted(self.primes, key=lambda p: (len(p), p.generator))
        found = []

        def extend(chain, start):
            for i in range(start, len(ordered)):
                if chain[-1].is_proper_subset(ordered[i]):
                    grown = chain + (ordered[i],)
                    found.append(grown)
                    if len(found) > DOMAIN_LIMIT:
                        raise errors.CapExceededError('More than {} prime chains in {}'.format(DOMAIN_LIMIT, self.lattice.name))
                    extend(grown, i + 1)

        for i, prime in enumerate(ordered):
            found.append((prime,))
            extend((prime,), i + 1)
        return found


    @cached_property
    def disjoint_families(self):
        """Families of at least two nonzero, pairwise disjoint elements
        """

        found = []

        def extend(family, start):
            for i in range(start, len(self.nonzero)):
                x = self.nonzero[i]
                if all(self.lattice.meet[x, y] == 0 for y in family):
                    grown = family + (x,)
                    if len(grown) >= 2:
                        found.append(grown)
                        if len(found) > DOMAIN_LIMIT:
                            raise errors.CapExceededError('More than {} disjoint families in {}'.format(DOMAIN_LIMIT, self.lattice.name))
                    extend(grown, i + 1)

        extend((), 0)
        return found


    def maximal_chains(self, items):
        """Maximal chains under inclusion of a family of ideals, as tuples from the bottom up

        Maximal chains of a finite poset are the paths of its Hasse diagram from a
        minimal to a maximal member.
        """

        graph = nx.DiGraph()
        graph.add_nodes_from(items)
        graph.add_edges_from((first, second) for first in items for second in items if first.is_proper_subset(second))
        hasse = nx.transitive_reduction(graph)
        sources = sorted(node for node in hasse if hasse.in_degree(node) == 0)
        sinks = sorted(node for node in hasse if hasse.out_degree(node) == 0)
        chains = []
        for source in sources:
            if source in sinks:
                chains.append((source,))
                continue
            for sink in sinks:
                for path in nx.all_simple_paths(hasse, source, sink):
                    chains.append(tuple(path))
                    if len(chains) > DOMAIN_LIMIT:
                        raise errors.CapExceededError('More than {} maximal chains in {}'.format(DOMAIN_LIMIT, self.lattice.name))
        return chains


    @cached_property
    def chain_intersections(self):
        """(chain, intersection) pairs for the maximal chains selected by the 'chain_reading' option

        'values' takes the maximal chains of V(L). 'ideals' takes the maximal
        chains of proper ideals and intersects the values lying on each.
        """

        reading = self.options.get('chain_reading', 'values')
        if reading == 'values':
            return [(chain, self.intersect(chain)) for chain in self.maximal_chains(self.values)]
        if reading == 'ideals':
            found = []
            for chain in self.maximal_chains(self.proper_ideals):
                on_chain = [ideal for ideal in chain if ideal in self.values]
                if on_chain:
                    found.append((tuple(on_chain), self.intersect(on_chain)))
            return found
        raise ValueError('Unknown chain reading: {}'.format(reading))

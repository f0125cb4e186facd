"""Checkers relating minimal primes, polars, ultrafilters and values
"""

# Created:   18-Oct-2026

from itertools import combinations_with_replacement

import lattice_spectra.ideals as ideals
from lattice_spectra.theorems.context import (ASSERTION, IMPLICATION, CheckerEntry,
                                              ConditionBlock, global_instance)


def _meet_closed(ctx):
    return [('U={}'.format(ctx.subset_name(subset)), subset) for subset in ctx.meet_closed_subsets]


def _primes(ctx):
    return [('P={}'.format(ctx.name(prime)), prime) for prime in ctx.primes]


def _nonzero_ideals(ctx):
    return [('I={}'.format(ctx.name(ideal)), ideal) for ideal in ctx.nonzero_ideals]


def _polar_union(ctx, subset):
    found = set()
    for a in subset:
        found |= ctx.polar([a]).carrier
    return frozenset(found)


def _is_ultrafilter(ctx, subset):
    return any(f.carrier == subset for f in ctx.ultrafilters)


def _meets_to_zero(ctx, subset):
    outside = ideals.complement(ctx.lattice, subset)
    return all(any(ctx.lattice.meet[x, u] == 0 for u in subset) for x in outside)


def _complement_min_prime(ctx, subset):
    outside = ideals.complement(ctx.lattice, subset)
    return any(m.carrier == outside for m in ctx.min_primes)


def _ultrafilter_duality(ctx, _):
    complements = sorted(tuple(sorted(ideals.complement(ctx.lattice, f.carrier))) for f in ctx.ultrafilters)
    minimal = sorted(tuple(sorted(m.carrier)) for m in ctx.min_primes)
    return complements == minimal and len(set(complements)) == len(ctx.ultrafilters)


ULTRAFILTERS = CheckerEntry(
    theorem_id='L4.1',
    title='ultrafilters are complements of minimal primes',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'nonempty meet-closed U avoiding 0', _meet_closed, (
            ('(1)', _is_ultrafilter),
            ('(2)', _meets_to_zero),
            ('(3)', _complement_min_prime),
        )),
        ConditionBlock('duality', 'lattice', global_instance, (
            ('bijection', _ultrafilter_duality),
        ), ASSERTION),
    ),
)


def _avoiding(family, subset):
    return [ideal for ideal in family if not (ideal.carrier & subset)]


POLAR_UNIONS = CheckerEntry(
    theorem_id='L4.2',
    title='unions of polars as meets of primes',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'nonempty meet-closed X avoiding 0', _meet_closed, (
            ('primes', lambda ctx, x: _polar_union(ctx, x) == ctx.intersect(_avoiding(ctx.primes, x)).carrier),
            ('min-primes', lambda ctx, x: _polar_union(ctx, x) == ctx.intersect(_avoiding(ctx.min_primes, x)).carrier),
        ), ASSERTION),
        ConditionBlock('prime', 'prime P', _primes, (
            ('S_P', lambda ctx, p: _polar_union(ctx, ideals.complement(ctx.lattice, p.carrier)) == ctx.s_p(p).carrier),
        ), ASSERTION),
    ),
)


def _kills_own_polars(ctx, prime):
    return all(not ctx.polar([x]).issubset(prime) for x in prime.carrier)


MINIMAL_PRIMES = CheckerEntry(
    theorem_id='T4.3',
    title='minimal prime characterizations',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'prime P', _primes, (
            ('(1)', lambda ctx, p: p in ctx.min_primes),
            ('(2)', lambda ctx, p: p.carrier == _polar_union(ctx, ideals.complement(ctx.lattice, p.carrier))),
            ('(3)', _kills_own_polars),
        )),
    ),
)


def _not_containing(family, ideal):
    return [other for other in family if not ideal.issubset(other)]


POLARS_OF_IDEALS = CheckerEntry(
    theorem_id='L4.4',
    title='polars of ideals as meets of primes',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'nonzero ideal A', _nonzero_ideals, (
            ('primes', lambda ctx, a: ctx.polar(a.carrier) == ctx.intersect(_not_containing(ctx.primes, a))),
            ('min-primes', lambda ctx, a: ctx.polar(a.carrier) == ctx.intersect(_not_containing(ctx.min_primes, a))),
        ), ASSERTION),
    ),
)


def _nonzero_pairs(ctx):
    return [('a={}, b={}'.format(ctx.element(a), ctx.element(b)), (a, b)) for a, b in combinations_with_replacement(ctx.nonzero, 2)]


def _values_split(ctx, pair):
    a, b = pair
    first, second = set(ctx.val(a)), set(ctx.val(b))
    return not (first & second) and (first | second) == set(ctx.val(int(ctx.lattice.join[a, b])))


def _families(ctx):
    return [('F={}'.format(ctx.subset_name(family)), family) for family in ctx.disjoint_families]


def _family_values(ctx, family):
    joined = set()
    for x in family:
        joined |= set(ctx.val(x))
    return set(ctx.val(ctx.lattice.join_all(family))) == joined


DISJOINT_VALUES = CheckerEntry(
    theorem_id='L4.5',
    title='disjoint elements have disjoint values',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'pair a, b > 0', _nonzero_pairs, (
            ('(1)', lambda ctx, pair: ctx.lattice.meet[pair[0], pair[1]] == 0),
            ('(2)', _values_split),
        )),
        ConditionBlock('families', 'pairwise disjoint family of nonzero elements', _families, (
            ('union', _family_values),
        ), ASSERTION),
    ),
)


def _totally_ordered_ideal(ctx, ideal):
    carrier = sorted(ideal.carrier)
    return all(ctx.lattice.comparable(a, b) for a in carrier for b in carrier)


def _polar_constant(ctx, ideal):
    whole_polar = ctx.polar(ideal.carrier)
    return all(ctx.polar([a]) == whole_polar for a in ideal.carrier if a != 0)


def _maximal_totally_ordered(ctx, ideal):
    closure = ctx.double_polar(ideal.carrier)
    if not _totally_ordered_ideal(ctx, closure):
        return False
    return not any(closure.is_proper_subset(other) and _totally_ordered_ideal(ctx, other) for other in ctx.ideals)


def _minimal_nonzero_polar(ctx, ideal):
    closure = ctx.double_polar(ideal.carrier)
    if closure == ctx.zero:
        return False
    return not any(other != ctx.zero and other.is_proper_subset(closure) for other in ctx.polar_ideals)


def _maximal_proper_polar(ctx, ideal):
    image = ctx.polar(ideal.carrier)
    if image == ctx.whole:
        return False
    return not any(other != ctx.whole and image.is_proper_subset(other) for other in ctx.polar_ideals)


TOTALLY_ORDERED_IDEALS = CheckerEntry(
    theorem_id='T4.6',
    title='totally ordered ideals',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'nonzero ideal I', _nonzero_ideals, (
            ('(1)', _totally_ordered_ideal),
            ('(2)', _polar_constant),
            ('(3)', lambda ctx, i: ctx.polar(i.carrier) in ctx.primes),
            ('(4)', lambda ctx, i: ctx.polar(i.carrier) in ctx.min_primes),
            ('(5)', _maximal_totally_ordered),
            ('(6)', _minimal_nonzero_polar),
            ('(7)', _maximal_proper_polar),
            ('(8)', lambda ctx, i: all(len(ctx.val(a)) == 1 for a in i.carrier if a != 0)),
        )),
    ),
)


def _polars_split(ctx, _):
    return all(ctx.comparable(p, q) or ctx.join(p, q) == ctx.whole for p in ctx.polar_ideals for q in ctx.polar_ideals)


def _polars_minimal(ctx, _):
    return all(p in ctx.min_primes for p in ctx.polar_ideals if p != ctx.zero and p != ctx.whole)


POLARS_MINIMAL = CheckerEntry(
    theorem_id='T4.7',
    title='polar ideals are minimal primes',
    requires_decomposable=True,
    note='the conclusion ranges over polars strictly between {0} and L',
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('hypothesis', _polars_split),
            ('conclusion', _polars_minimal),
        ), IMPLICATION),
    ),
)


def _principal_double_polars(ctx, _):
    return all(ideals.principal(ctx.lattice, x) == ctx.double_polar([x]) for x in ctx.lattice.elements)


ALL_PRIMES_MINIMAL = CheckerEntry(
    theorem_id='T4.8',
    title='every prime is minimal',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', lambda ctx, _: set(ctx.primes) == set(ctx.min_primes)),
            ('(2)', lambda ctx, _: ctx.strongly_projectable),
            ('(3)', lambda ctx, _: ctx.projectable and _principal_double_polars(ctx, _)),
        )),
    ),
)


def _all_ideals(ctx):
    return [('M={}'.format(ctx.name(ideal)), ideal) for ideal in ctx.ideals]


VALUE_CHAINS = CheckerEntry(
    theorem_id='L4.9',
    title='minimal primes as meets of maximal chains of values',
    requires_decomposable=True,
    note="chains are nonempty maximal chains of V(L); option chain_reading='ideals' uses maximal chains of proper ideals",
    blocks=(
        ConditionBlock('', 'ideal M', _all_ideals, (
            ('(1)', lambda ctx, m: m in ctx.min_primes),
            ('(2)', lambda ctx, m: any(meet == m for _, meet in ctx.chain_intersections)),
        )),
    ),
)


def _atomic_values(ctx, _):
    atoms = [m for m in ctx.values if not any(other.is_proper_subset(m) for other in ctx.values)]
    return all(any(atom.issubset(m) for atom in atoms) for m in ctx.values)


def _root_system(ctx, _):
    return all(ctx.is_chain([q for q in ctx.primes if p.issubset(q)]) for p in ctx.primes)


ATOMIC_VALUES = CheckerEntry(
    theorem_id='T4.10',
    title='minimal primes are regular exactly when V(L) is atomic',
    requires_decomposable=True,
    degenerate=True,
    note='finitely many minimal primes lie below each prime and V(L) is atomic in every finite lattice',
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', lambda ctx, _: set(ctx.min_primes) <= set(ctx.values)),
            ('(2)', _atomic_values),
        )),
        ConditionBlock('root-system', 'lattice', global_instance, (
            ('root-system', _root_system),
            ('atomic', _atomic_values),
        ), ASSERTION),
    ),
)


ENTRIES = [
    ULTRAFILTERS,
    POLAR_UNIONS,
    MINIMAL_PRIMES,
    POLARS_OF_IDEALS,
    DISJOINT_VALUES,
    TOTALLY_ORDERED_IDEALS,
    POLARS_MINIMAL,
    ALL_PRIMES_MINIMAL,
    VALUE_CHAINS,
    ATOMIC_VALUES,
]

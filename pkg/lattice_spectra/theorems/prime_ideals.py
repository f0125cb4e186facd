"""Checkers for decomposability and the characterizations of prime ideals
"""

# Created:   18-Oct-2026

import numpy as np

from lattice_spectra.theorems.context import (ASSERTION, IMPLICATION, CheckerEntry,
                                              ConditionBlock, global_instance)


def _proper_ideals(ctx):
    return [('P={}'.format(ctx.name(ideal)), ideal) for ideal in ctx.proper_ideals]


def _inside(ctx, ideal):
    mask = np.zeros(ctx.lattice.size, dtype=bool)
    mask[list(ideal.carrier)] = True
    return mask


def _zero_meet_splits(ctx, ideal):
    inside = _inside(ctx, ideal)
    violations = (ctx.lattice.meet == 0) & ~inside[:, None] & ~inside[None, :]
    return not violations.any()


def _complement_meet_closed(ctx, ideal):
    inside = _inside(ctx, ideal)
    violations = ~inside[:, None] & ~inside[None, :] & inside[ctx.lattice.meet]
    return not violations.any()


def _ideal_pairs_split(ctx, ideal):
    for first in ctx.ideals:
        for second in ctx.ideals:
            if (first.carrier & second.carrier) <= ideal.carrier and not (first.issubset(ideal) or second.issubset(ideal)):
                return False
    return True


def _upper_ideals_chain(ctx, ideal):
    return ctx.is_chain([other for other in ctx.ideals if ideal.issubset(other)])


PRIME_CHARACTERIZATIONS = CheckerEntry(
    theorem_id='T3.1',
    title='prime ideal characterizations',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'proper ideal P', _proper_ideals, (
            ('(1)', lambda ctx, p: p in ctx.primes),
            ('(2)', _zero_meet_splits),
            ('(3)', _complement_meet_closed),
            ('(4)', _ideal_pairs_split),
            ('(5)', _upper_ideals_chain),
        )),
    ),
)


STRONGLY_PROJECTABLE_DECOMPOSABLE = CheckerEntry(
    theorem_id='E2.2',
    title='strongly projectable lattices are decomposable',
    requires_decomposable=False,
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('strongly-projectable', lambda ctx, _: ctx.strongly_projectable),
            ('decomposable', lambda ctx, _: ctx.decomposable),
        ), IMPLICATION),
    ),
)


def _values_are_primes(ctx, _):
    return set(ctx.values) <= set(ctx.primes)


def _trivial_meets(ctx, _):
    return ctx.intersect(ctx.values) == ctx.zero and ctx.intersect(ctx.primes) == ctx.zero


def _ideals_are_meets(ctx, _):
    for ideal in ctx.ideals:
        if ctx.intersect([m for m in ctx.values if ideal.issubset(m)]) != ideal:
            return False
        if ctx.intersect([p for p in ctx.primes if ideal.issubset(p)]) != ideal:
            return False
    return True


PRIME_SEPARATION = CheckerEntry(
    theorem_id='C3.2',
    title='values are prime and separate ideals',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', _values_are_primes),
            ('(2)', _trivial_meets),
            ('(3)', _ideals_are_meets),
        ), ASSERTION),
    ),
)


def _prime_chains(ctx):
    return [('chain ' + ' < '.join(ctx.name(p) for p in chain), chain) for chain in ctx.prime_chains]


def _primes(ctx):
    return [('P={}'.format(ctx.name(prime)), prime) for prime in ctx.primes]


def _nontrivial(ctx):
    # {0} = L is never prime, so a one-element lattice has nothing to compare
    return global_instance(ctx) if ctx.lattice.size > 1 else []


PRIME_CHAINS = CheckerEntry(
    theorem_id='C3.3',
    title='chains of primes and totally ordered lattices',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('(1)', 'nonempty chain of primes', _prime_chains, (
            ('meet-prime', lambda ctx, chain: ctx.intersect(chain) in ctx.primes),
        ), ASSERTION),
        ConditionBlock('(2)', 'prime P', _primes, (
            ('upper-chain', lambda ctx, p: _upper_ideals_chain(ctx, p)),
        ), ASSERTION),
        ConditionBlock('(3)', 'lattice with at least two elements', _nontrivial, (
            ('chain', lambda ctx, _: ctx.totally_ordered),
            ('zero-prime', lambda ctx, _: ctx.zero in ctx.primes),
        )),
    ),
)


def _incomparable_join_whole(ctx, family):
    for first in family:
        for second in family:
            if not ctx.comparable(first, second) and ctx.join(first, second) != ctx.whole:
                return False
    return True


NORMALITY = CheckerEntry(
    theorem_id='C3.4',
    title='normality characterizations',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', lambda ctx, _: all(len([m for m in ctx.min_primes if m.issubset(p)]) == 1 for p in ctx.primes)),
            ('(2)', lambda ctx, _: _incomparable_join_whole(ctx, ctx.min_primes)),
            ('(3)', lambda ctx, _: _incomparable_join_whole(ctx, ctx.primes)),
            ('(4)', lambda ctx, _: _incomparable_join_whole(ctx, ctx.values)),
        )),
    ),
)


def _finite_dcc(ctx, _):
    # Every finite poset satisfies the descending chain condition
    return True


PRIMES_ARE_VALUES = CheckerEntry(
    theorem_id='T3.5',
    title='primes coincide with values under DCC',
    requires_decomposable=True,
    degenerate=True,
    note='DCC holds in every finite lattice, so only Spe(L) = V(L) is tested',
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', lambda ctx, _: set(ctx.primes) == set(ctx.values)),
            ('(2)', _finite_dcc),
            ('(3)', _finite_dcc),
        )),
    ),
)


ENTRIES = [
    STRONGLY_PROJECTABLE_DECOMPOSABLE,
    PRIME_CHARACTERIZATIONS,
    PRIME_SEPARATION,
    PRIME_CHAINS,
    NORMALITY,
    PRIMES_ARE_VALUES,
]

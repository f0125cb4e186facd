"""Checkers for special ideals, S_P and the special decomposition of elements
"""

# Created:   18-Oct-2026

import lattice_spectra.errors as errors
from lattice_spectra.core import distributivity_witness
from lattice_spectra.decomp import decompose_special
from lattice_spectra.ideals import ideal_lattice
from lattice_spectra.theorems.context import ASSERTION, CheckerEntry, ConditionBlock, global_instance


def _proper(ctx, symbol):
    return [('{}={}'.format(symbol, ctx.name(ideal)), ideal) for ideal in ctx.proper_ideals]


def _unique_value(ctx, ideal):
    return any(ctx.val(x) == [ideal] for x in ctx.nonzero)


def _pairwise_prime(ctx, ideal):
    for first in ctx.ideals:
        for second in ctx.ideals:
            if (first.carrier & second.carrier) <= ideal.carrier and not (first.issubset(ideal) or second.issubset(ideal)):
                return False
    return True


def _cover_value(ctx, ideal):
    cover = ctx.intersect([other for other in ctx.ideals if ideal.is_proper_subset(other)])
    return any(ctx.val(x) == [ideal] for x in cover.carrier - ideal.carrier)


SPECIAL_IDEALS = CheckerEntry(
    theorem_id='T5.1',
    title='special ideal characterizations',
    requires_decomposable=False,
    note='families of ideals reduce to pairs in a finite lattice; the whole lattice is excluded',
    blocks=(
        ConditionBlock('', 'proper ideal M', lambda ctx: _proper(ctx, 'M'), (
            ('(1)', _unique_value),
            ('(2)', _pairwise_prime),
            ('(3)', _cover_value),
        )),
    ),
)


def _prime_pairs(ctx):
    return [('P1={}, P2={}'.format(ctx.name(p), ctx.name(q)), (p, q)) for p in ctx.primes for q in ctx.primes]


COMPARABLE_PRIMES = CheckerEntry(
    theorem_id='L5.2',
    title='S_P below a prime exactly when the primes are comparable',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'pair of primes', _prime_pairs, (
            ('subset', lambda ctx, pair: ctx.s_p(pair[0]).issubset(pair[1])),
            ('comparable', lambda ctx, pair: ctx.comparable(*pair)),
        )),
    ),
)


def _incomparable_support(ctx, prime):
    found = set()
    for a in ctx.lattice.elements:
        if a == 0 or all(not ctx.comparable(q, prime) for q in ctx.primes if a not in q):
            found.add(a)
    return frozenset(found)


S_P_ELEMENTS = CheckerEntry(
    theorem_id='L5.3',
    title='elements of S_P',
    requires_decomposable=True,
    blocks=(
        ConditionBlock('', 'prime P', lambda ctx: [('P={}'.format(ctx.name(p)), p) for p in ctx.primes], (
            ('S_P', lambda ctx, p: ctx.s_p(p).carrier == _incomparable_support(ctx, p)),
        ), ASSERTION),
    ),
)


def _element_ideal_pairs(ctx):
    return [('g={}, I={}'.format(ctx.element(g), ctx.name(ideal)), (g, ideal)) for g in ctx.nonzero for ideal in ctx.ideals]


def _unique_value_above(ctx, pair):
    g, ideal = pair
    above = [q for q in ctx.val(g) if ideal.issubset(q)]
    if len(above) != 1:
        return False
    return all(int(ctx.lattice.meet[x, g]) not in ideal for x in ctx.lattice.elements if x not in ideal)


def _between_s_p(ctx, pair):
    g, ideal = pair
    return any(ctx.s_p(p).issubset(ideal) and ideal.issubset(p) for p in ctx.val(g))


IDEALS_BETWEEN = CheckerEntry(
    theorem_id='T5.4',
    title='ideals between S_P and a value',
    requires_decomposable=True,
    note='condition (2) asks for some value P of g',
    blocks=(
        ConditionBlock('', 'element g > 0 and ideal I', _element_ideal_pairs, (
            ('(1)', _unique_value_above),
            ('(2)', _between_s_p),
        )),
    ),
)


def _above_everything(ctx, ideal):
    return ideal in ctx.primes and all(ctx.lattice.le(ideal.generator, x) for x in ctx.lattice.elements if x not in ideal)


def _comparable_with_all(ctx, ideal):
    return ideal in ctx.primes and all(ctx.comparable(ideal, other) for other in ctx.ideals)


def _outside(ctx, ideal):
    return [a for a in ctx.lattice.elements if a not in ideal]


SPECIAL_CORE = CheckerEntry(
    theorem_id='T5.5',
    title='primes above every minimal prime',
    requires_decomposable=True,
    note='x > K reads as x outside K and above every member of K; K ranges over proper ideals',
    blocks=(
        ConditionBlock('', 'proper ideal K', lambda ctx: _proper(ctx, 'K'), (
            ('(1)', _above_everything),
            ('(2)', _comparable_with_all),
            ('(3)', lambda ctx, k: all(p.issubset(k) for p in ctx.polar_ideals if p != ctx.whole)),
            ('(4)', lambda ctx, k: all(m.issubset(k) for m in ctx.min_primes)),
            ('(5)', lambda ctx, k: all(ctx.polar([a]) == ctx.zero for a in _outside(ctx, k))),
            ('(6)', lambda ctx, k: all(len(ctx.val(a)) == 1 for a in _outside(ctx, k))),
        )),
    ),
)


def _ideal_lattice_distributive(ctx, _):
    # Complete and alpha-distributivity reduce to the finite distributive laws
    lattice = ideal_lattice(ctx.lattice)
    return distributivity_witness(lattice) is None and distributivity_witness(lattice, dual=True) is None


VALUES_SPECIAL = CheckerEntry(
    theorem_id='T5.6',
    title='every value is special',
    requires_decomposable=True,
    degenerate=True,
    note='Ide(L) of a finite distributive lattice is completely distributive, so only V(L) = S(L) is tested',
    blocks=(
        ConditionBlock('', 'lattice', global_instance, (
            ('(1)', lambda ctx, _: set(ctx.values) == {ideal for ideal in ctx.ideals if _unique_value(ctx, ideal)}),
            ('(2)', _ideal_lattice_distributive),
            ('(3)', _ideal_lattice_distributive),
        )),
    ),
)


def _finitely_many_values(ctx, a):
    # A finite lattice has finitely many ideals
    return len(ctx.val(a)) <= len(ctx.ideals)


def _decomposes(ctx, a):
    try:
        decomposition = decompose_special(ctx.lattice, a)
    except errors.NotDecomposableError:
        return False
    parts = decomposition.parts
    disjoint = all(ctx.lattice.meet[x, y] == 0 for i, x in enumerate(parts) for y in parts[i + 1:])
    return disjoint and ctx.lattice.join_all(parts) == a and all(len(ctx.val(x)) == 1 for x in parts)


SPECIAL_DECOMPOSITION = CheckerEntry(
    theorem_id='T5.9',
    title='disjoint decomposition into special elements',
    requires_decomposable=True,
    degenerate=True,
    note='Every element of a finite lattice has finitely many values, so (1) always holds and only (2) is tested',
    blocks=(
        ConditionBlock('', 'element a > 0', lambda ctx: [('a={}'.format(ctx.element(a)), a) for a in ctx.nonzero], (
            ('(1)', _finitely_many_values),
            ('(2)', _decomposes),
        )),
    ),
)


ENTRIES = [
    SPECIAL_IDEALS,
    COMPARABLE_PRIMES,
    S_P_ELEMENTS,
    IDEALS_BETWEEN,
    SPECIAL_CORE,
    VALUES_SPECIAL,
    SPECIAL_DECOMPOSITION,
]

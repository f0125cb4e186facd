"""Decomposability, projectability and the constructive special decomposition

A distributive lattice is decomposable when every incomparable pair a, b splits
as a = abar v (a ^ b), b = bbar v (a ^ b) with abar ^ bbar = 0.
"""

# Created:   18-Oct-2026

from dataclasses import dataclass
from itertools import combinations
from typing import List

import lattice_spectra.errors as errors
import lattice_spectra.ideals as ideals
from lattice_spectra.core import interval, require_distributive
from lattice_spectra.debug import _initialize_logger


_logger = _initialize_logger('lattice_spectra.decomp')


@dataclass(frozen=True)
class DecompositionWitness:
    """Splitting of an incomparable pair (a, b) through abar and bbar
    """

    a: int
    b: int
    abar: int
    bbar: int

    def swapped(self):
        return DecompositionWitness(self.b, self.a, self.bbar, self.abar)


@dataclass(frozen=True)
class SpecialDecomposition:
    """An element written as a join of pairwise disjoint special parts

    Attributes
    ----------
    element : int
        The decomposed element
    parts : list of int
        The parts, in the order of their values
    values : list of Ideal
        values[i] is the unique value of parts[i]
    """

    element: int
    parts: List[int]
    values: List[ideals.Ideal]

    @property
    def value_map(self):
        return dict(zip(self.parts, self.values))


def _find_witness(lattice, a, b):
    common = int(lattice.meet[a, b])
    for abar in lattice.elements:
        if lattice.join[abar, common] != a:
            continue
        for bbar in lattice.elements:
            if lattice.join[bbar, common] == b and lattice.meet[abar, bbar] == 0:
                return DecompositionWitness(a, b, abar, bbar)
    return None


def is_decomposable(lattice):
    """Searches a decomposition witness for every incomparable pair

    Returns
    -------
    result : (bool, dict or tuple)
        (True, {(a, b): DecompositionWitness}) over incomparable pairs with a < b
        in index order, or (False, (a, b)) for the smallest pair without a witness

    Raises
    ------
    NotDistributiveError
        The lattice is not distributive
    """

    require_distributive(lattice)
    table = {}
    for a, b in combinations(lattice.elements, 2):
        if lattice.comparable(a, b):
            continue
        witness = _find_witness(lattice, a, b)
        if witness is None:
            _logger.debug('{}: pair {},{} has no witness'.format(lattice.name, lattice.labels[a], lattice.labels[b]))
            return False, (a, b)
        table[(a, b)] = witness
    return True, table


def witness_for(table, a, b):
    """Looks up the witness of a pair in either orientation
    """

    if (a, b) in table:
        return table[(a, b)]
    return table[(b, a)].swapped()


def require_decomposable(lattice):
    decomposable, found = is_decomposable(lattice)
    if not decomposable:
        pair = tuple(lattice.labels[x] for x in found)
        raise errors.NotDecomposableError('{} is not decomposable (pair {})'.format(lattice.name, ','.join(pair)), pair)
    return found


def is_strongly_projectable(lattice):
    """Checks L = (a] v a-perp for every element a
    """

    require_distributive(lattice)
    top = ideals.whole(lattice)
    for a in lattice.elements:
        if ideals.ideal_join(lattice, ideals.principal(lattice, a), ideals.polar(lattice, [a])) != top:
            return False
    return True


def is_projectable(lattice):
    """Checks L = x-perp v x-perp-perp for every element x
    """

    require_distributive(lattice)
    top = ideals.whole(lattice)
    for x in lattice.elements:
        if ideals.ideal_join(lattice, ideals.polar(lattice, [x]), ideals.double_polar(lattice, [x])) != top:
            return False
    return True


def is_normal(lattice):
    return all(len(ideals.min_primes_below(lattice, prime)) == 1 for prime in ideals.primes(lattice))


def is_relatively_normal(lattice):
    """Checks that every interval [a, b] is normal
    """

    require_distributive(lattice)
    for a in lattice.elements:
        for b in lattice.up(a):
            if not is_normal(interval(lattice, a, b)):
                return False
    return True


def _split_pair(lattice, table, first, second, a):
    """Two-prime case: parts in second - first and first - second below a
    """

    x1 = min(second.carrier - first.carrier)
    x2 = min(first.carrier - second.carrier)
    witness = witness_for(table, x1, x2)
    return int(lattice.meet[a, witness.abar]), int(lattice.meet[a, witness.bbar])


def _disjointify(lattice, table, found, a):
    n = len(found)
    if n == 2:
        return list(_split_pair(lattice, table, found[0], found[1], a))

    head = _disjointify(lattice, table, found[:-1], a)
    tail = _disjointify(lattice, table, found[1:], a)
    parts = [0] * n
    for i in range(1, n - 1):
        parts[i] = int(lattice.meet[head[i], tail[i - 1]])
    first, last = _split_pair(lattice, table, found[0], found[-1], a)
    parts[0] = int(lattice.meet[first, head[0]])
    parts[-1] = int(lattice.meet[last, tail[-1]])
    return parts


def disjointify(lattice, found, a):
    """Finds pairwise disjoint a_i below a with a_i in every Q_j except Q_i

    Parameters
    ----------
    lattice : Lattice
        A decomposable lattice
    found : list of Ideal
        Pairwise incomparable primes Q_1..Q_n, n >= 2
    a : int
        Element outside every Q_i

    Returns
    -------
    parts : list of int
        a_1..a_n

    Raises
    ------
    NotDecomposableError, TooFewPrimesError, NotPrimeError, NotIncomparableError, ElementInsidePrimeError
    """

    table = require_decomposable(lattice)
    found = list(found)
    if len(found) < 2:
        raise errors.TooFewPrimesError('Disjointification needs at least two primes, got {}'.format(len(found)))
    for prime in found:
        if not ideals.is_prime(lattice, prime):
            raise errors.NotPrimeError('{} is not prime in {}'.format(ideals.ideal_label(lattice, prime), lattice.name))
    for first, second in combinations(found, 2):
        if first.issubset(second) or second.issubset(first):
            raise errors.NotIncomparableError('{} and {} are comparable'.format(ideals.ideal_label(lattice, first), ideals.ideal_label(lattice, second)))
    for prime in found:
        if a in prime:
            raise errors.ElementInsidePrimeError('{} lies in {}'.format(lattice.labels[a], ideals.ideal_label(lattice, prime)))
    return _disjointify(lattice, table, found, a)


def decompose_special(lattice, a):
    """Writes a > 0 as the join of disjoint parts, one per value of a

    Raises
    ------
    BottomElementError
        a is the bottom element
    NotDecomposableError
        The lattice is not decomposable
    """

    if a == 0:
        raise errors.BottomElementError('The bottom element has no special decomposition')
    require_decomposable(lattice)
    found = sorted(ideals.values_of(lattice, a))
    if len(found) == 1:
        return SpecialDecomposition(a, [a], found)

    parts = disjointify(lattice, found, a)
    if lattice.join_all(parts) != a or any(ideals.values_of(lattice, part) != [value] for part, value in zip(parts, found)):
        _logger.warning('Decomposition of {} in {} fails its postconditions'.format(lattice.labels[a], lattice.name))
        raise errors.SpectrumInconsistencyError('Parts of {} do not recombine into special elements'.format(lattice.labels[a]))
    return SpecialDecomposition(a, parts, found)

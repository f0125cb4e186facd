"""Ideal structure of a finite distributive lattice

Every ideal of a finite lattice is principal, so an Ideal keeps both its carrier
subset and its generator. The carrier is what the definitions talk about; the
generator is what orders ideals and names them in reports.
"""

# Created:   18-Oct-2026

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List

import numpy as np

import lattice_spectra.errors as errors
from lattice_spectra.core import require_distributive, Lattice
from lattice_spectra.debug import _initialize_logger


_logger = _initialize_logger('lattice_spectra.ideals')


@dataclass(frozen=True)
class Ideal:
    """A nonempty down-closed, join-closed element subset

    Attributes
    ----------
    carrier : frozenset of int
        Element indices in the ideal
    generator : int
        The maximum element of the carrier
    """

    carrier: frozenset = field(compare=True)
    generator: int = field(compare=False)

    def __contains__(self, element):
        return element in self.carrier

    def __len__(self):
        return len(self.carrier)

    def __lt__(self, other):
        return self.generator < other.generator

    def issubset(self, other):
        return self.carrier <= other.carrier

    def is_proper_subset(self, other):
        return self.carrier < other.carrier


@dataclass(frozen=True)
class Filter:
    """A meet-closed up-set excluding the bottom element
    """

    carrier: frozenset = field(compare=True)
    generator: int = field(compare=False)

    def __contains__(self, element):
        return element in self.carrier

    def __lt__(self, other):
        return self.generator < other.generator


def ideal_label(lattice, ideal):
    """Names an ideal by its generator, with the zero ideal written {0}
    """

    if ideal.generator == 0:
        return '{0}'
    return '({}]'.format(lattice.labels[ideal.generator])


def filter_label(lattice, filt):
    return '[{})'.format(lattice.labels[filt.generator])


def carrier_labels(lattice, subset):
    return [lattice.labels[x] for x in sorted(subset)]


def principal(lattice, a):
    return Ideal(lattice.down(a), a)


def ideal_from_carrier(lattice, subset):
    """Validates the ideal axioms for an element subset

    Raises
    ------
    NotAnIdealError
        The subset is empty, not down-closed, not join-closed or not principal
    """

    carrier = frozenset(int(x) for x in subset)
    if not carrier:
        raise errors.NotAnIdealError('An ideal must be nonempty')
    for x in carrier:
        if not lattice.down(x) <= carrier:
            raise errors.NotAnIdealError('Subset is not down-closed below {}'.format(lattice.labels[x]))
    for a, b in combinations(sorted(carrier), 2):
        if int(lattice.join[a, b]) not in carrier:
            raise errors.NotAnIdealError('Subset does not contain {} v {}'.format(lattice.labels[a], lattice.labels[b]))
    generator = lattice.join_all(carrier)
    if lattice.down(generator) != carrier:
        raise errors.NotAnIdealError('Subset is not the principal ideal of its join')
    return Ideal(carrier, generator)


def whole(lattice):
    return principal(lattice, lattice.top)


def zero_ideal(lattice):
    return principal(lattice, 0)


def enumerate_ideals(lattice):
    """All ideals, including the lattice itself, ordered by generator index
    """

    require_distributive(lattice)
    return [principal(lattice, a) for a in lattice.elements]


def ideal_join(lattice, first, second):
    """I v J = { a v b : a in I, b in J }
    """

    carrier = {int(lattice.join[a, b]) for a in first.carrier for b in second.carrier}
    return ideal_from_carrier(lattice, carrier)


def ideal_meet(lattice, first, second):
    return ideal_from_carrier(lattice, first.carrier & second.carrier)


def intersect_all(lattice, ideals):
    """Intersection of a family of ideals, the empty family giving the whole lattice
    """

    ideals = list(ideals)
    if not ideals:
        return whole(lattice)
    carrier = frozenset.intersection(*(ideal.carrier for ideal in ideals))
    return ideal_from_carrier(lattice, carrier)


def complement(lattice, subset):
    return frozenset(lattice.elements) - frozenset(subset)


def ideal_lattice(lattice):
    """Ide(L) as a Lattice, with elements named after their generators
    """

    ideals = enumerate_ideals(lattice)
    leq = np.array([[first.issubset(second) for second in ideals] for first in ideals], dtype=bool)
    return Lattice('Ide({})'.format(lattice.name), [ideal_label(lattice, ideal) for ideal in ideals], leq, max_size=lattice.size)


def _mask(lattice, subset):
    mask = np.zeros(lattice.size, dtype=bool)
    mask[list(subset)] = True
    return mask


def is_prime(lattice, ideal):
    """Checks a ^ b in P implies a in P or b in P, for a proper ideal P
    """

    if ideal.generator == lattice.top:
        return False
    inside = _mask(lattice, ideal.carrier)
    violations = inside[lattice.meet] & ~inside[:, None] & ~inside[None, :]
    return not violations.any()


def primes(lattice):
    return [ideal for ideal in enumerate_ideals(lattice) if is_prime(lattice, ideal)]


def _minimal(ideals):
    return [ideal for ideal in ideals if not any(other.is_proper_subset(ideal) for other in ideals)]


def _maximal(ideals):
    return [ideal for ideal in ideals if not any(ideal.is_proper_subset(other) for other in ideals)]


def min_primes(lattice):
    return _minimal(primes(lattice))


def min_primes_below(lattice, prime):
    return [ideal for ideal in min_primes(lattice) if ideal.issubset(prime)]


def normality_index(lattice):
    """Largest number of minimal primes contained in one prime, 0 without primes
    """

    return max((len(min_primes_below(lattice, prime)) for prime in primes(lattice)), default=0)


def values_of(lattice, x):
    """Val(x): the ideals maximal with respect to not containing x

    Raises
    ------
    BottomHasNoValueError
        x is the bottom element
    """

    if x == 0:
        raise errors.BottomHasNoValueError('The bottom element has no values')
    return _maximal([ideal for ideal in enumerate_ideals(lattice) if x not in ideal])


def is_special_element(lattice, x):
    return x != 0 and len(values_of(lattice, x)) == 1


def m_star(lattice, ideal):
    """Intersection of all ideals strictly containing the given one

    Raises
    ------
    MStarUndefinedError
        The ideal is the whole lattice
    """

    if ideal.generator == lattice.top:
        raise errors.MStarUndefinedError('M* is undefined for the whole lattice {}'.format(lattice.name))
    return intersect_all(lattice, [other for other in enumerate_ideals(lattice) if ideal.is_proper_subset(other)])


def _is_meet_irreducible(lattice, ideal, ideals):
    if ideal.generator == lattice.top:
        return False
    for first, second in combinations(ideals, 2):
        if (first.carrier & second.carrier) == ideal.carrier and first != ideal and second != ideal:
            return False
    return True


def regular_ideal_characterizations(lattice):
    """The four descriptions of V(L), each as a list ordered by generator

    Returns
    -------
    descriptions : dict
        'values': ideals that are a value of some x > 0;
        'meet-irreducible': meet-irreducible proper ideals;
        'proper-cover': proper M with M strictly inside M*;
        'value-of-cover': proper M with M strictly inside M* and M in Val(x) for every x in M* - M
    """

    ideals = enumerate_ideals(lattice)
    values = set()
    for x in lattice.elements:
        if x != 0:
            values.update(values_of(lattice, x))

    proper_cover, value_of_cover = [], []
    for ideal in ideals:
        if ideal.generator == lattice.top:
            continue
        cover = m_star(lattice, ideal)
        if ideal.is_proper_subset(cover):
            proper_cover.append(ideal)
            if all(ideal in values_of(lattice, x) for x in cover.carrier - ideal.carrier):
                value_of_cover.append(ideal)

    return {
        'values':           sorted(values),
        'meet-irreducible': [ideal for ideal in ideals if _is_meet_irreducible(lattice, ideal, ideals)],
        'proper-cover':     proper_cover,
        'value-of-cover':   value_of_cover,
    }


def _agreed(lattice, descriptions, kind):
    first_key = next(iter(descriptions))
    reference = descriptions[first_key]
    for key, found in descriptions.items():
        if found != reference:
            _logger.warning('{} of {}: "{}" and "{}" disagree'.format(kind, lattice.name, first_key, key))
            raise errors.SpectrumInconsistencyError('{} descriptions "{}" and "{}" disagree on {}'.format(kind, first_key, key, lattice.name))
    return reference


def regular_ideals(lattice):
    """V(L), cross-checked against all of its descriptions

    Raises
    ------
    SpectrumInconsistencyError
        Two descriptions disagree
    """

    return _agreed(lattice, regular_ideal_characterizations(lattice), 'Regular ideal')


def _prime_for_pairs(lattice, ideal, ideals):
    """I n J inside M implies I or J inside M, over all ideal pairs

    Arbitrary families reduce to pairs in a finite lattice: the intersection of a
    family equals the intersection of finitely many members, and inducting on
    their number reduces each step to two ideals.
    """

    for first in ideals:
        for second in ideals:
            if (first.carrier & second.carrier) <= ideal.carrier:
                if not (first.issubset(ideal) or second.issubset(ideal)):
                    return False
    return True


def special_ideal_characterizations(lattice):
    """The three descriptions of S(L), each as a list ordered by generator
    """

    ideals = enumerate_ideals(lattice)
    unique_values = set()
    for x in lattice.elements:
        if x != 0:
            found = values_of(lattice, x)
            if len(found) == 1:
                unique_values.add(found[0])

    pairwise, cover_value = [], []
    for ideal in ideals:
        if ideal.generator == lattice.top:
            continue
        if _prime_for_pairs(lattice, ideal, ideals):
            pairwise.append(ideal)
        cover = m_star(lattice, ideal)
        if any(values_of(lattice, x) == [ideal] for x in cover.carrier - ideal.carrier):
            cover_value.append(ideal)

    return {
        'unique-value': sorted(unique_values),
        'pairwise-prime': pairwise,
        'cover-value': cover_value,
    }


def special_ideals(lattice):
    return _agreed(lattice, special_ideal_characterizations(lattice), 'Special ideal')


def is_special(lattice, ideal):
    return ideal in special_ideals(lattice)


def polar(lattice, subset):
    """A-perp: elements whose meet with every member of A is 0

    Raises
    ------
    EmptySetError
        A is empty
    """

    subset = sorted(set(int(a) for a in subset))
    if not subset:
        raise errors.EmptySetError('The polar of an empty set is not defined')
    inside = (lattice.meet[:, subset] == 0).all(axis=1)
    return ideal_from_carrier(lattice, np.flatnonzero(inside))


def double_polar(lattice, subset):
    return polar(lattice, polar(lattice, subset).carrier)


def is_polar(lattice, ideal):
    return double_polar(lattice, ideal.carrier) == ideal


def polar_ideals(lattice):
    return [ideal for ideal in enumerate_ideals(lattice) if is_polar(lattice, ideal)]


def polar_duality_holds(lattice):
    """Checks that P -> P-perp is an order-reversing involution on the polar ideals
    """

    found = polar_ideals(lattice)
    images = {ideal: polar(lattice, ideal.carrier) for ideal in found}
    for ideal, image in images.items():
        if image not in images or images[image] != ideal:
            return False
    for first, second in combinations(found, 2):
        if first.issubset(second) and not images[second].issubset(images[first]):
            return False
        if second.issubset(first) and not images[first].issubset(images[second]):
            return False
    return True


def filters(lattice):
    """All filters, each the principal up-set of a nonzero element, ordered by generator
    """

    return [Filter(lattice.up(a), a) for a in lattice.elements if a != 0]


def ultrafilters(lattice):
    found = filters(lattice)
    return [f for f in found if not any(f.carrier < other.carrier for other in found)]


def is_meet_closed(lattice, subset):
    return all(int(lattice.meet[a, b]) in subset for a, b in combinations(sorted(subset), 2))


def generated_filter(lattice, subset):
    """Smallest filter containing a meet-closed set

    Raises
    ------
    EmptySetError
        The set is empty
    NotMeetClosedError
        The set is not meet-closed, or its meet is 0
    """

    subset = frozenset(int(a) for a in subset)
    if not subset:
        raise errors.EmptySetError('A filter is generated by a nonempty set')
    if not is_meet_closed(lattice, subset):
        raise errors.NotMeetClosedError('Generating set is not meet-closed')
    bottom = lattice.meet_all(subset)
    if bottom == 0:
        raise errors.NotMeetClosedError('Generating set contains 0')
    return Filter(lattice.up(bottom), bottom)


def s_p(lattice, prime):
    """S_P: intersection of the minimal primes contained in the prime P

    Raises
    ------
    NotPrimeError
        P is not prime
    """

    if not is_prime(lattice, prime):
        raise errors.NotPrimeError('{} is not prime in {}'.format(ideal_label(lattice, prime), lattice.name))
    return intersect_all(lattice, min_primes_below(lattice, prime))


@dataclass
class SpectrumReport:
    """All computed ideal classes of one lattice, each ordered by generator
    """

    lattice_name: str
    all_ideals: List[Ideal]
    primes: List[Ideal]
    min_primes: List[Ideal]
    values: List[Ideal]
    specials: List[Ideal]
    polar_ideals: List[Ideal]
    ultrafilters: List[Filter]
    val_of: Dict[int, List[Ideal]]
    s_p: Dict[int, Ideal]
    normality_index: int
    polar_duality: bool

    def to_dict(self, lattice):
        """JSON form: classes as lists of carrier label lists, maps keyed by generator label
        """

        def carriers(items):
            return [carrier_labels(lattice, item.carrier) for item in items]

        return {
            'lattice':          self.lattice_name,
            'elements':         list(lattice.labels),
            'ideals':           carriers(self.all_ideals),
            'primes':           carriers(self.primes),
            'min_primes':       carriers(self.min_primes),
            'values':           carriers(self.values),
            'specials':         carriers(self.specials),
            'polar_ideals':     carriers(self.polar_ideals),
            'ultrafilters':     carriers(self.ultrafilters),
            'val_of':           {lattice.labels[x]: carriers(found) for x, found in self.val_of.items()},
            's_p':              {lattice.labels[g]: carrier_labels(lattice, ideal.carrier) for g, ideal in self.s_p.items()},
            'normality_index':  self.normality_index,
            'polar_duality':    self.polar_duality,
        }


def spectrum(lattice):
    """Computes the SpectrumReport of a finite distributive lattice

    Raises
    ------
    NotDistributiveError
        The lattice is not distributive
    """

    require_distributive(lattice)
    found_primes = primes(lattice)
    report = SpectrumReport(
        lattice_name    = lattice.name,
        all_ideals      = enumerate_ideals(lattice),
        primes          = found_primes,
        min_primes      = min_primes(lattice),
        values          = regular_ideals(lattice),
        specials        = special_ideals(lattice),
        polar_ideals    = polar_ideals(lattice),
        ultrafilters    = ultrafilters(lattice),
        val_of          = {x: values_of(lattice, x) for x in lattice.elements if x != 0},
        s_p             = {prime.generator: s_p(lattice, prime) for prime in found_primes},
        normality_index = normality_index(lattice),
        polar_duality   = polar_duality_holds(lattice),
    )
    _logger.debug('Spectrum of {}: {} primes, {} minimal'.format(lattice.name, len(report.primes), len(report.min_primes)))
    return report

import pytest # noqa

from hypothesis import given, settings
from hypothesis import strategies as st

import lattice_spectra.errors as err
import lattice_spectra.gen as gen
import lattice_spectra.ideals as ideals
from lattice_spectra.core import is_isomorphic
from lattice_spectra.decomp import is_decomposable


def generators(found):
    return [ideal.generator for ideal in found]


def labels(lattice, found):
    return [ideals.ideal_label(lattice, ideal) for ideal in found]


def test_kite_spectrum(KITE):
    report = ideals.spectrum(KITE)
    assert labels(KITE, report.all_ideals) == ['{0}', '(c]', '(a]', '(b]', '(1]']
    assert labels(KITE, report.primes) == ['{0}', '(a]', '(b]']
    assert labels(KITE, report.min_primes) == ['{0}']
    assert labels(KITE, report.values) == ['{0}', '(a]', '(b]']
    assert labels(KITE, report.specials) == ['{0}', '(a]', '(b]']
    assert labels(KITE, report.polar_ideals) == ['{0}', '(1]']
    assert [ideals.filter_label(KITE, f) for f in report.ultrafilters] == ['[c)']
    assert report.normality_index == 1
    assert report.polar_duality


def test_chain_primes(CATALOG):
    chain = CATALOG('C3')
    assert labels(chain, ideals.primes(chain)) == ['{0}', '(m]']
    assert labels(chain, ideals.min_primes(chain)) == ['{0}']


def test_boolean_primes(CATALOG):
    square = CATALOG('B2')
    assert labels(square, ideals.primes(square)) == ['(x]', '(y]']
    assert labels(square, ideals.min_primes(square)) == ['(x]', '(y]']
    assert labels(square, ideals.polar_ideals(square)) == ['{0}', '(x]', '(y]', '(1]']


def test_values_of(KITE):
    a, b, top = KITE.index('a'), KITE.index('b'), KITE.top
    assert generators(ideals.values_of(KITE, a)) == [b]
    assert generators(ideals.values_of(KITE, top)) == [a, b]
    assert ideals.is_special_element(KITE, a)
    assert not ideals.is_special_element(KITE, top)
    with pytest.raises(err.BottomHasNoValueError):
        ideals.values_of(KITE, 0)


def test_m_star(KITE):
    c = KITE.index('c')
    assert ideals.m_star(KITE, ideals.zero_ideal(KITE)).generator == c
    # (c] is the meet of (a] and (b], so nothing covers it uniquely
    assert ideals.m_star(KITE, ideals.principal(KITE, c)).generator == c
    with pytest.raises(err.MStarUndefinedError):
        ideals.m_star(KITE, ideals.whole(KITE))


def test_characterizations_agree(SMALL_DISTRIBUTIVE):
    for lattice in SMALL_DISTRIBUTIVE:
        regular = ideals.regular_ideal_characterizations(lattice)
        assert len({tuple(generators(found)) for found in regular.values()}) == 1
        special = ideals.special_ideal_characterizations(lattice)
        assert len({tuple(generators(found)) for found in special.values()}) == 1


def test_finite_primes_are_values(SMALL_DISTRIBUTIVE):
    for lattice in SMALL_DISTRIBUTIVE:
        assert ideals.primes(lattice) == ideals.regular_ideals(lattice)
        assert ideals.special_ideals(lattice) == ideals.regular_ideals(lattice)


def test_ideal_from_carrier(KITE):
    c, a, b = KITE.index('c'), KITE.index('a'), KITE.index('b')
    assert ideals.ideal_from_carrier(KITE, {0, c, a}).generator == a
    with pytest.raises(err.NotAnIdealError):
        ideals.ideal_from_carrier(KITE, {c, a})
    with pytest.raises(err.NotAnIdealError):
        ideals.ideal_from_carrier(KITE, {0, c, a, b})
    with pytest.raises(err.NotAnIdealError):
        ideals.ideal_from_carrier(KITE, set())


def test_ideal_operations(KITE):
    a, b = KITE.index('a'), KITE.index('b')
    first, second = ideals.principal(KITE, a), ideals.principal(KITE, b)
    assert ideals.ideal_join(KITE, first, second) == ideals.whole(KITE)
    assert ideals.ideal_meet(KITE, first, second).generator == KITE.index('c')
    assert ideals.intersect_all(KITE, []) == ideals.whole(KITE)
    assert ideals.complement(KITE, first.carrier) == frozenset({b, KITE.top})


def test_ideal_lattice(KITE):
    lattice = ideals.ideal_lattice(KITE)
    assert lattice.name == 'Ide(K5)'
    assert lattice.labels == ('{0}', '(c]', '(a]', '(b]', '(1]')
    assert is_isomorphic(lattice, KITE)


def test_polars(CATALOG, KITE):
    square = CATALOG('B2')
    x, y = square.index('x'), square.index('y')
    assert ideals.polar(square, [x]).generator == y
    assert ideals.double_polar(square, [x]).generator == x
    assert ideals.polar(KITE, [KITE.index('c')]) == ideals.zero_ideal(KITE)
    assert ideals.polar(KITE, [0]) == ideals.whole(KITE)
    with pytest.raises(err.EmptySetError):
        ideals.polar(KITE, [])


def test_filters(CATALOG):
    square = CATALOG('B2')
    x, y = square.index('x'), square.index('y')
    assert [f.generator for f in ideals.ultrafilters(square)] == [x, y]
    assert ideals.generated_filter(square, {x, square.top}).generator == x
    with pytest.raises(err.EmptySetError):
        ideals.generated_filter(square, set())
    with pytest.raises(err.NotMeetClosedError):
        ideals.generated_filter(square, {x, y})


def test_s_p(KITE, CATALOG):
    for prime in ideals.primes(KITE):
        assert ideals.s_p(KITE, prime) == ideals.zero_ideal(KITE)
    square = CATALOG('B2')
    x = square.index('x')
    assert ideals.s_p(square, ideals.principal(square, x)).generator == x
    with pytest.raises(err.NotPrimeError):
        ideals.s_p(square, ideals.zero_ideal(square))


def test_normality_index(LATTICE):
    # Two atoms joined below a new top: the coatom prime holds both minimal primes
    lattice = LATTICE(['0', 'x', 'y', 's', '1'], [('0', 'x'), ('0', 'y'), ('x', 's'), ('y', 's'), ('s', '1')])
    assert ideals.normality_index(lattice) == 2
    top_prime = ideals.principal(lattice, lattice.index('s'))
    assert len(ideals.min_primes_below(lattice, top_prime)) == 2


def test_ultrafilter_duality(DISTRIBUTIVE_UP_TO_8):
    for lattice in DISTRIBUTIVE_UP_TO_8:
        if not is_decomposable(lattice)[0]:
            continue
        complements = {ideals.complement(lattice, f.carrier) for f in ideals.ultrafilters(lattice)}
        assert complements == {m.carrier for m in ideals.min_primes(lattice)}, lattice.name
        assert len(ideals.ultrafilters(lattice)) == len(ideals.min_primes(lattice))


def test_spectrum_needs_distributive(CATALOG):
    with pytest.raises(err.NotDistributiveError):
        ideals.spectrum(CATALOG('N5'))


def test_spectrum_to_dict(KITE):
    document = ideals.spectrum(KITE).to_dict(KITE)
    assert document['lattice'] == 'K5'
    assert document['primes'] == [['0'], ['0', 'c', 'a'], ['0', 'c', 'b']]
    assert document['val_of']['1'] == [['0', 'c', 'a'], ['0', 'c', 'b']]
    assert document['s_p'] == {'0': ['0'], 'a': ['0'], 'b': ['0']}


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=5))
def test_random_spectra_nest(seed, k):
    lattice = gen.random_distributive(seed, k)
    specials = set(ideals.special_ideals(lattice))
    values = set(ideals.regular_ideals(lattice))
    found = set(ideals.primes(lattice))
    assert specials <= values <= found


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=0, max_value=5))
def test_random_ideal_lattice_is_isomorphic(seed, k):
    lattice = gen.random_distributive(seed, k)
    assert is_isomorphic(ideals.ideal_lattice(lattice), lattice)

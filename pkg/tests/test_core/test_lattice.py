import pytest # noqa

import itertools

import numpy as np

import lattice_spectra.core as core
import lattice_spectra.errors as err
import lattice_spectra.gen as gen


def brute_force_distributive(lattice):
    for a, b, c in itertools.product(lattice.elements, repeat=3):
        if lattice.meet[a, lattice.join[b, c]] != lattice.join[lattice.meet[a, b], lattice.meet[a, c]]:
            return False, (a, b, c)
    return True, None


def test_chain_meet(CATALOG):
    chain = CATALOG('C3')
    assert chain.labels == ('0', 'm', '1')
    assert chain.meet[chain.index('m'), chain.index('1')] == chain.index('m')
    assert chain.join[chain.index('0'), chain.index('m')] == chain.index('m')
    assert chain.top == 2
    assert chain.ranks == (0, 1, 2)


def test_diamond_is_lattice_but_not_distributive(CATALOG):
    diamond = CATALOG('M3')
    distributive, witness = core.is_distributive(diamond)
    assert not distributive
    assert tuple(diamond.labels[x] for x in witness) == ('x', 'y', 'z')
    assert brute_force_distributive(diamond) == (False, witness)


def test_pentagon_witness(CATALOG):
    pentagon = CATALOG('N5')
    distributive, witness = core.is_distributive(pentagon)
    assert not distributive
    assert tuple(pentagon.labels[x] for x in witness) == ('c', 'a', 'b')
    assert brute_force_distributive(pentagon) == (False, witness)


def test_require_distributive_carries_triple(CATALOG):
    with pytest.raises(err.NotDistributiveError) as info:
        core.require_distributive(CATALOG('N5'))
    assert info.value.triple == ('c', 'a', 'b')


def test_distributive_catalog_matches_brute_force():
    for entry in gen.catalog():
        if entry.lattice.size > 12:
            continue
        assert entry.flags['distributive'] == brute_force_distributive(entry.lattice)[0]


def test_dual_law_agrees(CATALOG):
    for name in ['B2', 'K5', 'M3', 'N5', 'G2x3']:
        lattice = CATALOG(name)
        assert (core.distributivity_witness(lattice) is None) == (core.distributivity_witness(lattice, dual=True) is None)


def test_no_join(LATTICE):
    with pytest.raises(err.NoJoinError) as info:
        LATTICE(['0', 'a', 'b'], [('0', 'a'), ('0', 'b')])
    assert info.value.pair == ('a', 'b')


def test_cycle_rejected(LATTICE):
    with pytest.raises(err.NotAPosetError):
        LATTICE(['0', 'a', 'b'], [('0', 'a'), ('a', 'b'), ('b', 'a')])


def test_no_bottom(LATTICE):
    with pytest.raises(err.NoBottomError):
        LATTICE(['a', 'b', '1'], [('a', '1'), ('b', '1')])


def test_unknown_cover_label(LATTICE):
    with pytest.raises(err.UnknownElementError) as info:
        LATTICE(['0', '1'], [('0', 'q')])
    assert info.value.element == 'q'


def test_duplicate_labels(LATTICE):
    with pytest.raises(err.LatticeFormatError):
        LATTICE(['0', '0'], [])


def test_bottom_relocated(LATTICE):
    lattice = LATTICE(['1', 'a', '0'], [('0', 'a'), ('a', '1')])
    assert lattice.labels == ('0', '1', 'a')
    assert lattice.label_map == {'1': 0, 'a': 1, '0': 2}
    assert all(lattice.le(0, x) for x in lattice.elements)


def test_too_large():
    with pytest.raises(err.LatticeTooLargeError):
        core.build_from_covers(['0', 'm', '1'], [('0', 'm'), ('m', '1')], max_size=2)


def test_set_max_lattice_size():
    original = core.MAX_LATTICE_SIZE
    try:
        core.set_max_lattice_size(2)
        with pytest.raises(err.LatticeTooLargeError):
            gen.chain_lattice(3)
    finally:
        core.set_max_lattice_size(original)
    with pytest.raises(ValueError):
        core.set_max_lattice_size(0)


def test_unknown_element(KITE):
    with pytest.raises(err.UnknownElementError):
        KITE.index('z')


def test_totally_ordered(CATALOG):
    assert core.is_totally_ordered(CATALOG('C3'))
    assert not core.is_totally_ordered(CATALOG('B2'))
    assert not core.is_totally_ordered(CATALOG('K5'))


def test_kite_covers(KITE):
    assert KITE.covers() == [('0', 'c'), ('c', 'a'), ('c', 'b'), ('a', '1'), ('b', '1')]
    assert KITE.to_dict()['covers'] == [['0', 'c'], ['c', 'a'], ['c', 'b'], ['a', '1'], ['b', '1']]


def test_join_irreducibles(CATALOG, KITE):
    chain = core.join_irreducibles(CATALOG('C3'))
    assert chain.labels == ('m', '1')
    assert chain.lt[0, 1] and not chain.lt[1, 0]

    antichain = core.join_irreducibles(CATALOG('B2'))
    assert antichain.labels == ('x', 'y')
    assert not antichain.lt.any()

    kite = core.join_irreducibles(KITE)
    assert kite.labels == ('c', 'a', 'b')
    assert kite.elements == (1, 2, 3)
    assert kite.lt[0, 1] and kite.lt[0, 2] and not kite.lt[1, 2]


def test_join_irreducibles_needs_distributive(CATALOG):
    with pytest.raises(err.NotDistributiveError):
        core.join_irreducibles(CATALOG('M3'))


def test_birkhoff_round_trip():
    for entry in gen.catalog():
        lattice = entry.lattice
        if not entry.flags['distributive'] or lattice.size > 12:
            continue
        points = core.join_irreducibles(lattice)
        rebuilt = gen.downset_lattice(gen.PosetSpec(points.lt))
        assert core.is_isomorphic(rebuilt, lattice), lattice.name


def test_build_from_leq(KITE):
    pairs = [(KITE.labels[a], KITE.labels[b]) for a, b in np.argwhere(KITE.leq)]
    rebuilt = core.build_from_leq(list(KITE.labels), pairs, name='K5')
    assert rebuilt.covers() == KITE.covers()


def test_build_from_leq_not_transitive():
    with pytest.raises(err.NotAPosetError):
        core.build_from_leq(['0', 'a', '1'], [('0', 'a'), ('a', '1')])


def test_build_from_leq_not_antisymmetric():
    with pytest.raises(err.NotAPosetError):
        core.build_from_leq(['0', 'a', 'b'], [('0', 'a'), ('0', 'b'), ('a', 'b'), ('b', 'a')])


def test_interval(KITE):
    upper = core.interval(KITE, KITE.index('c'), KITE.index('1'))
    assert upper.name == 'K5[c,1]'
    assert upper.labels[0] == 'c'
    assert upper.size == 4
    assert core.is_isomorphic(upper, gen.get_catalog_entry('B2').lattice)


def test_canonical_form_ignores_labels(KITE, LATTICE):
    relabelled = LATTICE(['z', 'q', 'p', 'r', 'w'], [('w', 'r'), ('r', 'p'), ('r', 'q'), ('p', 'z'), ('q', 'z')])
    assert core.is_isomorphic(KITE, relabelled)
    assert not core.is_isomorphic(KITE, gen.get_catalog_entry('C5').lattice)


def test_tables_are_read_only(KITE):
    with pytest.raises(ValueError):
        KITE.meet[0, 0] = 1

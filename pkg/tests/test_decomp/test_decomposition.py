import pytest # noqa

import itertools

import lattice_spectra.decomp as decomp
import lattice_spectra.errors as err
import lattice_spectra.ideals as ideals


def brute_force_values(lattice, x):
    """Generators of the ideals maximal among those missing x, computed on the order alone
    """

    missing = [m for m in lattice.elements if not lattice.leq[x, m]]
    return sorted(m for m in missing if not any(lattice.leq[m, other] and m != other for other in missing))


def brute_force_decomposable(lattice):
    """Looks for split elements of every incomparable pair by exhaustive search
    """

    for a, b in itertools.combinations(lattice.elements, 2):
        if lattice.leq[a, b] or lattice.leq[b, a]:
            continue
        common = lattice.meet[a, b]
        found = any(lattice.join[p, common] == a and lattice.join[q, common] == b and lattice.meet[p, q] == 0
                    for p in lattice.elements for q in lattice.elements)
        if not found:
            return False
    return True


def test_kite_not_decomposable(KITE):
    decomposable, pair = decomp.is_decomposable(KITE)
    assert not decomposable
    assert pair == (KITE.index('a'), KITE.index('b'))
    with pytest.raises(err.NotDecomposableError) as info:
        decomp.require_decomposable(KITE)
    assert info.value.pair == ('a', 'b')


def test_catalog_decomposable(CATALOG):
    for name in ['C1', 'C2', 'C3', 'C6', 'B2', 'B3', 'G2x2', 'G2x3', 'G3x3', 'G3x4']:
        assert decomp.is_decomposable(CATALOG(name))[0], name


def test_agrees_with_brute_force(SMALL_DISTRIBUTIVE):
    for lattice in SMALL_DISTRIBUTIVE:
        assert decomp.is_decomposable(lattice)[0] == brute_force_decomposable(lattice), lattice.name


def test_witness_table(CATALOG):
    square = CATALOG('B2')
    x, y = square.index('x'), square.index('y')
    decomposable, table = decomp.is_decomposable(square)
    assert decomposable
    witness = table[(x, y)]
    assert (witness.abar, witness.bbar) == (x, y)
    flipped = decomp.witness_for(table, y, x)
    assert (flipped.a, flipped.b, flipped.abar, flipped.bbar) == (y, x, y, x)


def test_non_distributive_rejected(CATALOG):
    with pytest.raises(err.NotDistributiveError):
        decomp.is_decomposable(CATALOG('M3'))


def test_projectability(CATALOG, KITE):
    assert decomp.is_strongly_projectable(CATALOG('C1'))
    assert decomp.is_strongly_projectable(CATALOG('C2'))
    assert not decomp.is_strongly_projectable(CATALOG('C3'))
    assert decomp.is_strongly_projectable(CATALOG('B3'))
    assert not decomp.is_strongly_projectable(KITE)
    assert decomp.is_projectable(CATALOG('C3'))
    assert decomp.is_projectable(KITE)


def test_normality(LATTICE, KITE):
    assert decomp.is_normal(KITE)
    assert decomp.is_relatively_normal(KITE)
    lattice = LATTICE(['0', 'x', 'y', 's', '1'], [('0', 'x'), ('0', 'y'), ('x', 's'), ('y', 's'), ('s', '1')])
    assert not decomp.is_normal(lattice)
    assert not decomp.is_relatively_normal(lattice)


def test_decompose_square(CATALOG):
    square = CATALOG('B2')
    x, y = square.index('x'), square.index('y')
    result = decomp.decompose_special(square, square.top)
    assert sorted(result.parts) == [x, y]
    assert result.value_map[x].generator == y
    assert result.value_map[y].generator == x


def test_decompose_chain(CATALOG):
    chain = CATALOG('C3')
    result = decomp.decompose_special(chain, chain.top)
    assert result.parts == [chain.top]
    assert [value.generator for value in result.values] == [chain.index('m')]


def test_decompose_errors(KITE, CATALOG):
    with pytest.raises(err.NotDecomposableError):
        decomp.decompose_special(KITE, KITE.top)
    with pytest.raises(err.BottomElementError):
        decomp.decompose_special(CATALOG('B2'), 0)


def test_disjointify_errors(CATALOG):
    square = CATALOG('B2')
    x, y = square.index('x'), square.index('y')
    first, second = ideals.principal(square, x), ideals.principal(square, y)
    with pytest.raises(err.TooFewPrimesError):
        decomp.disjointify(square, [first], square.top)
    with pytest.raises(err.NotPrimeError):
        decomp.disjointify(square, [first, ideals.zero_ideal(square)], square.top)
    with pytest.raises(err.ElementInsidePrimeError):
        decomp.disjointify(square, [first, second], x)
    chain = CATALOG('C3')
    with pytest.raises(err.NotIncomparableError):
        decomp.disjointify(chain, ideals.primes(chain), chain.top)


def test_disjointify_three_primes(CATALOG):
    cube = CATALOG('B3')
    found = ideals.primes(cube)
    parts = decomp.disjointify(cube, found, cube.top)
    assert len(parts) == 3
    for i, part in enumerate(parts):
        for j, prime in enumerate(found):
            assert (part in prime) == (i != j)
    for first, second in itertools.combinations(parts, 2):
        assert cube.meet[first, second] == 0


def test_decomposition_round_trip(DISTRIBUTIVE_UP_TO_8):
    for lattice in DISTRIBUTIVE_UP_TO_8:
        if not decomp.is_decomposable(lattice)[0]:
            continue
        for a in lattice.elements:
            if a == 0:
                continue
            result = decomp.decompose_special(lattice, a)
            for first, second in itertools.combinations(result.parts, 2):
                assert lattice.meet[first, second] == 0
            assert lattice.join_all(result.parts) == a
            for part, value in zip(result.parts, result.values):
                assert brute_force_values(lattice, part) == [value.generator], (lattice.name, lattice.labels[a])

import pytest # noqa

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import lattice_spectra.decomp as decomp
import lattice_spectra.gen as gen
import lattice_spectra.ideals as ideals
from lattice_spectra.core import distributivity_witness, is_isomorphic, join_irreducibles
from lattice_spectra.theorems import check


@st.composite
def posets(draw, max_points=5):
    """Random strict orders: related pairs i < j drawn freely, then closed transitively
    """

    k = draw(st.integers(min_value=0, max_value=max_points))
    lt = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            lt[i, j] = draw(st.booleans())
    for middle in range(k):
        lt |= lt[:, [middle]] & lt[[middle], :]
    return gen.PosetSpec(lt)


@st.composite
def downset_lattices(draw, max_points=5):
    poset = draw(posets(max_points))
    return poset, gen.downset_lattice(poset)


def upper_covers_form_forest(poset):
    cover = poset.lt & ~np.matmul(poset.lt, poset.lt)
    return bool((cover.sum(axis=1) <= 1).all())


@settings(max_examples=60, deadline=None)
@given(downset_lattices())
def test_lattice_laws(pair):
    _, lattice = pair
    idx = np.arange(lattice.size)
    assert np.array_equal(lattice.meet, lattice.meet.T)
    assert np.array_equal(lattice.join[idx[:, None], lattice.meet], np.broadcast_to(idx[:, None], (lattice.size, lattice.size)))
    assert distributivity_witness(lattice) is None
    assert distributivity_witness(lattice, dual=True) is None


@settings(max_examples=60, deadline=None)
@given(downset_lattices())
def test_birkhoff_round_trip(pair):
    poset, lattice = pair
    points = join_irreducibles(lattice)
    assert len(points.labels) == poset.size
    assert gen.PosetSpec(points.lt).canonical_form == poset.canonical_form
    assert is_isomorphic(gen.downset_lattice(gen.PosetSpec(points.lt)), lattice)


@settings(max_examples=60, deadline=None)
@given(downset_lattices())
def test_decomposable_exactly_for_forests(pair):
    poset, lattice = pair
    assert decomp.is_decomposable(lattice)[0] == upper_covers_form_forest(poset)


@settings(max_examples=40, deadline=None)
@given(downset_lattices(max_points=4))
def test_primes_match_points(pair):
    poset, lattice = pair
    assert len(ideals.primes(lattice)) == poset.size
    assert len(ideals.min_primes(lattice)) == int((~poset.lt.any(axis=0)).sum())
    assert ideals.regular_ideals(lattice) == ideals.primes(lattice)


@settings(max_examples=30, deadline=None)
@given(downset_lattices(max_points=4))
def test_strongly_projectable_implies_decomposable(pair):
    _, lattice = pair
    if decomp.is_strongly_projectable(lattice):
        assert decomp.is_decomposable(lattice)[0]


@settings(max_examples=25, deadline=None)
@given(downset_lattices(max_points=4))
def test_prime_characterizations_on_decomposable(pair):
    _, lattice = pair
    if decomp.is_decomposable(lattice)[0]:
        assert check(lattice, 'T3.1').holds
        assert check(lattice, 'T5.9').holds

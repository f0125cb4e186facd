"""Lattice producers: the named catalog, isomorphism-free enumeration of finite
distributive lattices through their posets of join-irreducibles, and seeded
random generation.
"""

# Created:   18-Oct-2026

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import chain, groupby, permutations, product
from string import ascii_lowercase
from typing import Dict

import numpy as np
import networkx as nx

import lattice_spectra.errors as errors
from lattice_spectra.core import Lattice, Poset, build_from_covers, canonical_form, is_distributive
from lattice_spectra.debug import _initialize_logger
from lattice_spectra.decomp import is_decomposable, is_projectable, is_strongly_projectable


# Poset enumeration and random generation refuse more points than this
MAX_POSET_POINTS = 7

_logger = _initialize_logger('lattice_spectra.gen')


def set_max_poset_points(points):
    """Sets the default cap on poset points for enumeration and random generation
    """

    global MAX_POSET_POINTS
    if int(points) < 1:
        raise ValueError('Poset cap must be at least 1, got {}'.format(points))
    MAX_POSET_POINTS = int(points)


def _cap(cap):
    return MAX_POSET_POINTS if cap is None else cap


def _point_labels(k):
    return [ascii_lowercase[i] if k <= len(ascii_lowercase) else 'p{}'.format(i) for i in range(k)]


class PosetSpec(Poset):
    """A finite poset with a permutation-invariant canonical form
    """

    def __init__(self, lt, labels=None):
        lt = np.array(lt, dtype=bool)
        k = lt.shape[0] if lt.ndim == 2 else 0
        super().__init__(_point_labels(k) if labels is None else labels, lt.reshape((k, k)))


    @cached_property
    def canonical_form(self):
        """Smallest strict-order encoding over orderings that keep points sorted by (down, up) degree
        """

        below = self.lt.sum(axis=0)
        above = self.lt.sum(axis=1)

        def key(point):
            return int(below[point]), int(above[point])

        keyed = sorted(range(self.size), key=key)
        blocks = [list(group) for _, group in groupby(keyed, key=key)]
        best = None
        for arrangement in product(*(permutations(block) for block in blocks)):
            order = np.array(list(chain.from_iterable(arrangement)), dtype=np.intp)
            code = np.packbits(self.lt[np.ix_(order, order)]).tobytes()
            if best is None or code < best:
                best = code
        return tuple(key(point) for point in keyed), best


    def extended(self, downset):
        """New poset with one more point, maximal, lying above exactly the given downset
        """

        k = self.size
        lt = np.zeros((k + 1, k + 1), dtype=bool)
        lt[:k, :k] = self.lt
        lt[list(downset), k] = True
        return PosetSpec(lt)


def _posets_by_size(k, max_downsets=None):
    """Representatives of every isomorphism class of k-point posets, in canonical order

    Every poset arises from a smaller one by adding a maximal point above one of
    its downsets. Candidates with more than max_downsets downsets are dropped,
    which is safe because adding a point never removes downsets.
    """

    level = [PosetSpec(np.zeros((0, 0), dtype=bool))]
    for size in range(1, k + 1):
        found = {}
        for poset in level:
            for downset in poset.downsets:
                candidate = poset.extended(downset)
                if max_downsets is not None and len(candidate.downsets) > max_downsets:
                    continue
                found.setdefault(candidate.canonical_form, candidate)
        level = [found[form] for form in sorted(found)]
        _logger.debug('{} posets on {} points'.format(len(level), size))
    return level


def enumerate_posets(k, max_downsets=None, cap=None):
    """One representative per isomorphism class of posets on k points

    Raises
    ------
    CapExceededError
        k outside 1..cap
    """

    if k < 1 or k > _cap(cap):
        raise errors.CapExceededError('Poset size {} outside 1..{}'.format(k, _cap(cap)))
    return _posets_by_size(k, max_downsets)


def _downset_label(poset, downset):
    if not downset:
        return '0'
    if len(downset) == poset.size:
        return '1'
    separator = '+' if any(len(label) > 1 for label in poset.labels) else ''
    return separator.join(poset.labels[p] for p in poset.maximal(downset))


def downset_lattice(poset, name=None, max_size=None):
    """Lattice of the down-closed subsets of a poset, ordered by inclusion

    Elements are named after the maximal points of their downset, with 0 for the
    empty downset and 1 for the whole poset.
    """

    downsets = poset.downsets
    leq = np.array([[first <= second for second in downsets] for first in downsets], dtype=bool)
    labels = [_downset_label(poset, downset) for downset in downsets]
    return Lattice(name or 'D({})'.format(','.join(poset.labels)), labels, leq, max_size=max_size)


@dataclass(frozen=True)
class CatalogEntry:
    """A named fixture lattice with precomputed flags

    Attributes
    ----------
    flags : dict
        distributive, decomposable, strongly_projectable, projectable; the last
        three are None for non-distributive lattices
    """

    name: str
    lattice: Lattice
    flags: Dict[str, object]


def compute_flags(lattice):
    distributive = is_distributive(lattice)[0]
    if not distributive:
        return {'distributive': False, 'decomposable': None, 'strongly_projectable': None, 'projectable': None}
    return {
        'distributive': True,
        'decomposable': is_decomposable(lattice)[0],
        'strongly_projectable': is_strongly_projectable(lattice),
        'projectable': is_projectable(lattice),
    }


def chain_lattice(n):
    if n == 1:
        labels = ['0']
    elif n == 3:
        labels = ['0', 'm', '1']
    else:
        labels = ['0'] + ['m{}'.format(i) for i in range(1, n - 1)] + ['1']
    return build_from_covers(labels, list(zip(labels, labels[1:])), name='C{}'.format(n))


def boolean_lattice(n):
    points = 'xyzw'[:n]
    return downset_lattice(PosetSpec(np.zeros((n, n), dtype=bool), labels=list(points)), name='B{}'.format(n))


def grid_lattice(m, n):
    """Product of an m-chain and an n-chain, elements labelled by coordinates
    """

    cells = [(i, j) for i in range(m) for j in range(n)]
    labels = ['{}{}'.format(i, j) for i, j in cells]
    leq = np.array([[a[0] <= b[0] and a[1] <= b[1] for b in cells] for a in cells], dtype=bool)
    return Lattice('G{}x{}'.format(m, n), labels, leq)


def _fixtures():
    yield from (chain_lattice(n) for n in range(1, 7))
    yield from (boolean_lattice(n) for n in range(1, 5))
    yield from (grid_lattice(m, n) for m in range(2, 5) for n in range(m, 5))
    yield build_from_covers(['0', 'c', 'a', 'b', '1'], [('0', 'c'), ('c', 'a'), ('c', 'b'), ('a', '1'), ('b', '1')], name='K5')
    yield build_from_covers(['0', 'x', 'y', 'z', '1'], [('0', 'x'), ('0', 'y'), ('0', 'z'), ('x', '1'), ('y', '1'), ('z', '1')], name='M3')
    yield build_from_covers(['0', 'a', 'b', 'c', '1'], [('0', 'a'), ('a', 'c'), ('c', '1'), ('0', 'b'), ('b', '1')], name='N5')


@lru_cache(maxsize=None)
def _catalog():
    return tuple(CatalogEntry(lattice.name, lattice, compute_flags(lattice)) for lattice in _fixtures())


def catalog():
    """Chains C1-C6, Boolean lattices B1-B4, chain products G{m}x{n} for 2 <= m <= n <= 4, K5, M3 and N5
    """

    return list(_catalog())


def get_catalog_entry(name):
    for entry in _catalog():
        if entry.name == name:
            return entry
    raise errors.UnknownCatalogNameError('No catalog lattice named {}'.format(name))


@lru_cache(maxsize=None)
def _catalog_form(name):
    return canonical_form(get_catalog_entry(name).lattice)


def catalog_name_of(lattice):
    """Name of the first catalog lattice isomorphic to the given one, or None
    """

    form = None
    for entry in _catalog():
        if entry.lattice.size != lattice.size:
            continue
        if form is None:
            form = canonical_form(lattice)
        if _catalog_form(entry.name) == form:
            return entry.name
    return None


def _check_size_cap(max_elems, cap):
    # An n-element chain has n - 1 join-irreducibles
    if max_elems - 1 > _cap(cap):
        raise errors.CapExceededError('{} elements may need {} poset points, cap is {}'.format(max_elems, max_elems - 1, _cap(cap)))


def enumerate_distributive(max_elems, cap=None):
    """Streams one lattice per isomorphism class of distributive lattices with at most max_elems elements

    Lattices come ordered by size, then by the canonical form of their poset of
    join-irreducibles. Lattices isomorphic to a catalog entry are that entry,
    with its name and labels; the others are named DL{n}#{i}.

    Raises
    ------
    CapExceededError
        max_elems - 1 exceeds the poset cap
    """

    _check_size_cap(max_elems, cap)
    if max_elems < 1:
        return
    by_size = {}
    level = [PosetSpec(np.zeros((0, 0), dtype=bool))]
    for size in range(0, max_elems):
        for poset in level:
            by_size.setdefault(len(poset.downsets), []).append(poset)
        if size + 1 < max_elems:
            level = _posets_by_size(size + 1, max_downsets=max_elems)

    for n in sorted(by_size):
        for i, poset in enumerate(sorted(by_size[n], key=lambda p: p.canonical_form), start=1):
            lattice = downset_lattice(poset, name='DL{}#{}'.format(n, i))
            known = catalog_name_of(lattice)
            if known is not None:
                lattice = get_catalog_entry(known).lattice
            yield lattice


def naturally_labelled_orders(k):
    """Streams every strict order on points 0..k-1 whose relations point from lower to higher index

    Each pair i < j is related or not, and only transitive choices are kept.
    Every finite poset has a linear extension, so every isomorphism class shows
    up at least once.
    """

    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for chosen in product((False, True), repeat=len(pairs)):
        lt = np.zeros((k, k), dtype=bool)
        for (i, j), related in zip(pairs, chosen):
            lt[i, j] = related
        if (np.matmul(lt, lt) & ~lt).any():
            continue
        yield lt


def enumerate_distributive_direct(max_elems, cap=None):
    """Second enumeration strategy: bounded labelled orders filtered to distributive lattices

    Every lattice with n >= 2 elements is an order on n - 2 points with a new
    bottom and top. The middle orders come from naturally_labelled_orders. Each
    candidate is validated as a lattice, filtered by the distributive law and
    deduplicated by the lattice canonical form alone.
    """

    _check_size_cap(max_elems, cap)
    found = {}
    if max_elems >= 1:
        single = Lattice('C1', ['0'], [[True]])
        found[canonical_form(single)] = single
    for n in range(2, max_elems + 1):
        k = n - 2
        labels = ['0'] + ['p{}'.format(i) for i in range(k)] + ['1']
        for lt in naturally_labelled_orders(k):
            leq = np.zeros((n, n), dtype=bool)
            leq[0, :] = True
            leq[:, n - 1] = True
            leq[1:n - 1, 1:n - 1] = lt | np.eye(k, dtype=bool)
            try:
                lattice = Lattice('direct', labels, leq)
            except (errors.NoMeetError, errors.NoJoinError):
                continue
            if not is_distributive(lattice)[0]:
                continue
            found.setdefault(canonical_form(lattice), lattice)
    return sorted(found.values(), key=lambda lattice: lattice.size)


def count_by_size(lattices):
    counts = {}
    for lattice in lattices:
        counts[lattice.size] = counts.get(lattice.size, 0) + 1
    return counts


def random_poset(seed, k, cap=None):
    """Seeded random poset: each pair i < j is related with probability 1/2, then closed
    """

    if k < 0 or k > _cap(cap):
        raise errors.CapExceededError('Random poset size {} outside 0..{}'.format(k, _cap(cap)))
    rng = np.random.default_rng(seed)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(k))
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.5:
                graph.add_edge(i, j)
    lt = np.zeros((k, k), dtype=bool)
    for i, j in nx.transitive_closure_dag(graph).edges():
        lt[i, j] = True
    return PosetSpec(lt)


def random_distributive(seed, k, cap=None):
    """Downset lattice of a seeded random k-point poset

    Raises
    ------
    CapExceededError
        k exceeds the poset cap
    """

    return downset_lattice(random_poset(seed, k, cap=cap), name='random:{}@{}'.format(k, seed))

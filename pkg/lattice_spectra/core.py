"""Module containing the finite lattice and poset classes, and the order-theoretic
primitives used by every other lattice_spectra module.
"""

# Created:   18-Oct-2026

from functools import cached_property, reduce
from itertools import chain, groupby, permutations, product

import numpy as np
import networkx as nx

import lattice_spectra.errors as errors
from lattice_spectra.debug import _initialize_logger


# Validation refuses lattices above this size, exhaustive triple checks are cubic.
MAX_LATTICE_SIZE = 64

_logger = _initialize_logger('lattice_spectra.core')


def set_max_lattice_size(size):
    """Sets the default maximum number of elements accepted by lattice validation

    Parameters
    ----------
    size : int
        New maximum, at least 1
    """

    global MAX_LATTICE_SIZE
    if int(size) < 1:
        raise ValueError('Maximum lattice size must be at least 1, got {}'.format(size))
    MAX_LATTICE_SIZE = int(size)


def _read_only(array):
    array.setflags(write=False)
    return array


def _check_partial_order(leq, labels):
    n = len(labels)
    if not leq.diagonal().all():
        x = int(np.flatnonzero(~leq.diagonal())[0])
        raise errors.NotAPosetError('Order is not reflexive at {}'.format(labels[x]))
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        a, b = (int(v) for v in np.argwhere(both)[0])
        raise errors.NotAPosetError('Order has a cycle: {} <= {} <= {}'.format(labels[a], labels[b], labels[a]))
    missing = np.matmul(leq, leq) & ~leq
    if missing.any():
        a, c = (int(v) for v in np.argwhere(missing)[0])
        raise errors.NotAPosetError('Order is not transitive: {} <= {} is implied but absent'.format(labels[a], labels[c]))


def _bound_table(leq, labels, lower):
    """Builds the meet table (lower=True) or join table (lower=False) of an order

    Raises NoMeetError/NoJoinError for the first pair, in index order, without a bound.
    """

    n = len(labels)
    order = leq if lower else leq.T
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            common = np.flatnonzero(order[:, a] & order[:, b])
            best = [c for c in common if order[common, c].all()]
            if not best:
                kind, error = ('meet', errors.NoMeetError) if lower else ('join', errors.NoJoinError)
                raise error('{} and {} have no {}'.format(labels[a], labels[b], kind), (labels[a], labels[b]))
            table[a, b] = table[b, a] = best[0]
    return table


def _check_lattice_identities(lattice):
    n = lattice.size
    idx = np.arange(n)
    for name, table, other in (('meet', lattice.meet, lattice.join), ('join', lattice.join, lattice.meet)):
        if not np.array_equal(table, table.T):
            raise errors.LatticeAxiomError('{} table is not commutative'.format(name))
        if not np.array_equal(table.diagonal(), idx):
            raise errors.LatticeAxiomError('{} table is not idempotent'.format(name))
        left = table[table[:, :, None], idx[None, None, :]]
        right = table[idx[:, None, None], table[None, :, :]]
        if not np.array_equal(left, right):
            raise errors.LatticeAxiomError('{} table is not associative'.format(name))
        # a op (a other b) == a
        if not np.array_equal(table[idx[:, None], other], np.broadcast_to(idx[:, None], (n, n))):
            raise errors.LatticeAxiomError('{} table fails absorption'.format(name))


class Poset:
    """An immutable finite strict partial order on points 0..k-1

    Attributes
    ----------
    labels : tuple of str
        Point labels, in index order
    lt : numpy.ndarray
        Read-only k x k boolean matrix, lt[i, j] iff point i is strictly below point j
    """

    def __init__(self, labels, lt):
        labels = tuple(str(label) for label in labels)
        k = len(labels)
        lt = np.array(lt, dtype=bool).reshape((k, k))
        if lt.diagonal().any():
            raise errors.NotAPosetError('Strict order is not irreflexive')
        _check_partial_order(lt | np.eye(k, dtype=bool), labels)
        self.labels = labels
        self.size = k
        self.lt = _read_only(lt)


    def __repr__(self):
        pairs = ['{}<{}'.format(self.labels[i], self.labels[j]) for i, j in self.cover_pairs]
        return 'Poset({}; {})'.format(','.join(self.labels), ' '.join(pairs))


    @cached_property
    def le(self):
        return _read_only(self.lt | np.eye(self.size, dtype=bool))


    @cached_property
    def cover_pairs(self):
        child = self.lt & ~np.matmul(self.lt, self.lt)
        return tuple((int(i), int(j)) for i, j in np.argwhere(child))


    def below(self, point):
        return frozenset(int(i) for i in np.flatnonzero(self.lt[:, point]))


    def maximal(self, points):
        """Returns the points of a subset that lie below no other point of the subset
        """

        points = set(points)
        return tuple(sorted(p for p in points if not any(self.lt[p, q] for q in points)))


    @cached_property
    def downsets(self):
        """All down-closed point subsets, ordered by size and then by sorted points

        Points are decided in a linear extension so a point is only added once
        everything below it has been.
        """

        order = sorted(range(self.size), key=lambda p: (len(self.below(p)), p))
        found = []

        def extend(position, current):
            if position == len(order):
                found.append(frozenset(current))
                return
            point = order[position]
            extend(position + 1, current)
            if self.below(point) <= current:
                extend(position + 1, current | {point})

        extend(0, frozenset())
        found.sort(key=lambda d: (len(d), tuple(sorted(d))))
        return tuple(found)


class Lattice:
    """A validated, immutable finite lattice with minimum element at index 0

    Attributes
    ----------
    name : str
        Human readable label, a catalog id or user supplied
    labels : tuple of str
        Element labels, index 0 is the bottom element
    size : int
        Number of elements
    leq : numpy.ndarray
        Read-only n x n boolean order matrix
    meet, join : numpy.ndarray
        Read-only n x n tables of element indices
    label_map : dict
        Declared position of each label before the bottom was moved to index 0
    """

    def __init__(self, name, labels, leq, max_size=None):
        """Validates the order and derives meet/join tables

        Raises
        ------
        LatticeTooLargeError
            More elements than the configured maximum
        NotAPosetError
            leq is not a partial order
        NoBottomError
            No element lies below every other one
        NoMeetError, NoJoinError
            Some pair lacks a bound
        """

        labels = tuple(str(label) for label in labels)
        n = len(labels)
        limit = MAX_LATTICE_SIZE if max_size is None else max_size
        if n == 0:
            raise errors.LatticeFormatError('A lattice needs at least one element')
        if n > limit:
            raise errors.LatticeTooLargeError('{} has {} elements, maximum is {}'.format(name, n, limit))
        if len(set(labels)) != n:
            raise errors.LatticeFormatError('Duplicate element labels in {}'.format(name))

        leq = np.array(leq, dtype=bool).reshape((n, n))
        _check_partial_order(leq, labels)

        bottoms = np.flatnonzero(leq.all(axis=1))
        if len(bottoms) == 0:
            raise errors.NoBottomError('{} has no minimum element'.format(name))
        bottom = int(bottoms[0])
        order = [bottom] + [i for i in range(n) if i != bottom]
        if bottom != 0:
            _logger.debug('Moved bottom {} of {} to index 0'.format(labels[bottom], name))

        self.name       = name
        self.label_map  = {labels[i]: i for i in range(n)}
        self.labels     = tuple(labels[i] for i in order)
        self.size       = n
        self.leq        = _read_only(leq[np.ix_(order, order)].copy())
        self.meet       = _read_only(_bound_table(self.leq, self.labels, lower=True))
        self.join       = _read_only(_bound_table(self.leq, self.labels, lower=False))
        _check_lattice_identities(self)
        self._index     = {label: i for i, label in enumerate(self.labels)}


    def __repr__(self):
        return 'Lattice({}, {} elements)'.format(self.name, self.size)


    def __len__(self):
        return self.size


    @property
    def elements(self):
        return range(self.size)


    @property
    def bottom(self):
        return 0


    @cached_property
    def top(self):
        return int(np.flatnonzero(self.leq.all(axis=0))[0])


    def index(self, label):
        """Returns the index of an element label

        Raises
        ------
        UnknownElementError
            Label not declared in this lattice
        """

        try:
            return self._index[str(label)]
        except KeyError:
            raise errors.UnknownElementError(label) from None


    def label(self, element):
        return self.labels[element]


    def le(self, a, b):
        return bool(self.leq[a, b])


    def lt(self, a, b):
        return a != b and bool(self.leq[a, b])


    def comparable(self, a, b):
        return bool(self.leq[a, b] or self.leq[b, a])


    def down(self, a):
        return frozenset(int(x) for x in np.flatnonzero(self.leq[:, a]))


    def up(self, a):
        return frozenset(int(x) for x in np.flatnonzero(self.leq[a, :]))


    def meet_all(self, items):
        return reduce(lambda x, y: int(self.meet[x, y]), items, self.top)


    def join_all(self, items):
        return reduce(lambda x, y: int(self.join[x, y]), items, 0)


    @cached_property
    def cover_pairs(self):
        """Hasse edges (lower, upper) in index order
        """

        lt = self.leq & ~np.eye(self.size, dtype=bool)
        child = lt & ~np.matmul(lt, lt)
        return tuple((int(i), int(j)) for i, j in np.argwhere(child))


    def covers(self):
        return [(self.labels[i], self.labels[j]) for i, j in self.cover_pairs]


    def lower_covers(self, a):
        return tuple(i for i, j in self.cover_pairs if j == a)


    @cached_property
    def ranks(self):
        """Length of the longest chain from the bottom to each element
        """

        ranks = [0] * self.size
        for x in sorted(self.elements, key=lambda e: int(self.leq[:, e].sum())):
            ranks[x] = max((ranks[c] + 1 for c in self.lower_covers(x)), default=0)
        return tuple(ranks)


    @cached_property
    def distributive(self):
        return is_distributive(self)[0]


    def to_dict(self):
        """Exports the lattice in the cover-list JSON document form
        """

        return {'name': self.name, 'elements': list(self.labels), 'covers': [list(pair) for pair in self.covers()]}


def build_from_covers(names, covers, name='L', max_size=None):
    """Builds a lattice from element labels and a Hasse cover list

    Parameters
    ----------
    names : list of str
        Element labels, the bottom need not come first
    covers : list of (str, str)
        (lower, upper) pairs
    name : str
        Lattice name
    max_size : int, optional
        Overrides MAX_LATTICE_SIZE

    Returns
    -------
    lattice : Lattice
        Validated lattice with the bottom relocated to index 0

    Raises
    ------
    NotAPosetError
        The cover relation has a cycle
    NoBottomError, NoMeetError, NoJoinError
        The order is not a lattice with a minimum
    """

    names = [str(label) for label in names]
    if not names:
        raise errors.LatticeFormatError('{} declares no elements'.format(name))
    if len(set(names)) != len(names):
        raise errors.LatticeFormatError('Duplicate element labels in {}'.format(name))

    graph = nx.DiGraph()
    graph.add_nodes_from(names)
    for lower, upper in covers:
        for label in (str(lower), str(upper)):
            if label not in graph:
                raise errors.UnknownElementError(label)
        graph.add_edge(str(lower), str(upper))

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        path = ' -> '.join([u for u, _ in cycle] + [cycle[0][0]])
        raise errors.NotAPosetError('Cover relation of {} has a cycle: {}'.format(name, path))

    closure = nx.transitive_closure_dag(graph)
    position = {label: i for i, label in enumerate(names)}
    leq = np.eye(len(names), dtype=bool)
    for lower, upper in closure.edges():
        leq[position[lower], position[upper]] = True
    return Lattice(name, names, leq, max_size=max_size)


def build_from_leq(names, pairs, name='L', max_size=None):
    """Builds a lattice from the full order relation, given as (smaller, larger) pairs

    Reflexive pairs may be present or absent. The relation is reduced to its
    covers before building.
    """

    names = [str(label) for label in names]
    graph = nx.DiGraph()
    graph.add_nodes_from(names)
    for lower, upper in pairs:
        for label in (str(lower), str(upper)):
            if label not in graph:
                raise errors.UnknownElementError(label)
        if str(lower) != str(upper):
            graph.add_edge(str(lower), str(upper))

    if not nx.is_directed_acyclic_graph(graph):
        raise errors.NotAPosetError('Order relation of {} is not antisymmetric'.format(name))

    closure = nx.transitive_closure_dag(graph)
    missing = sorted(set(closure.edges()) - set(graph.edges()))
    if missing:
        lower, upper = missing[0]
        raise errors.NotAPosetError('Order relation of {} is not transitive: {} <= {} is missing'.format(name, lower, upper))

    reduced = nx.transitive_reduction(graph)
    return build_from_covers(names, sorted(reduced.edges()), name=name, max_size=max_size)


def distributivity_witness(lattice, dual=False):
    """Returns the lexicographically smallest triple failing the distributive law, or None

    Parameters
    ----------
    lattice : Lattice
        Lattice to check
    dual : bool
        Check a v (b ^ c) = (a v b) ^ (a v c) instead of a ^ (b v c) = (a ^ b) v (a ^ c)
    """

    inner, outer = (lattice.meet, lattice.join) if not dual else (lattice.join, lattice.meet)
    idx = np.arange(lattice.size)
    lhs = inner[idx[:, None, None], outer[None, :, :]]
    rhs = outer[inner[:, :, None], inner[:, None, :]]
    failing = np.argwhere(lhs != rhs)
    if len(failing) == 0:
        return None
    return tuple(int(v) for v in failing[0])


def is_distributive(lattice):
    """Checks the distributive law on all triples

    Returns
    -------
    result : (bool, tuple or None)
        Whether the lattice is distributive, and the smallest failing (a, b, c) otherwise
    """

    witness = distributivity_witness(lattice)
    dual_witness = distributivity_witness(lattice, dual=True)
    if (witness is None) != (dual_witness is None):
        raise errors.LatticeAxiomError('Distributive law and its dual disagree on {}'.format(lattice.name))
    return witness is None, witness


def require_distributive(lattice):
    distributive, witness = is_distributive(lattice)
    if not distributive:
        triple = tuple(lattice.labels[x] for x in witness)
        raise errors.NotDistributiveError('{} is not distributive (witness {})'.format(lattice.name, ','.join(triple)), triple)


def is_totally_ordered(lattice):
    return bool((lattice.leq | lattice.leq.T).all())


def join_irreducibles(lattice):
    """Returns the poset of nonzero elements with exactly one lower cover

    Raises
    ------
    NotDistributiveError
        The lattice is not distributive
    """

    require_distributive(lattice)
    points = [x for x in lattice.elements if x != 0 and len(lattice.lower_covers(x)) == 1]
    lt = lattice.leq[np.ix_(points, points)] & ~np.eye(len(points), dtype=bool)
    poset = Poset([lattice.labels[x] for x in points], lt)
    poset.elements = tuple(points)
    return poset


def interval(lattice, a, b):
    """Returns the sublattice [a, b], whose minimum is a
    """

    if not lattice.le(a, b):
        raise errors.LatticeSpectraError('{} is not below {}'.format(lattice.labels[a], lattice.labels[b]))
    members = [x for x in lattice.elements if lattice.le(a, x) and lattice.le(x, b)]
    name = '{}[{},{}]'.format(lattice.name, lattice.labels[a], lattice.labels[b])
    return Lattice(name, [lattice.labels[x] for x in members], lattice.leq[np.ix_(members, members)], max_size=lattice.size)


def canonical_form(lattice):
    """Isomorphism-invariant encoding of a lattice

    Elements are split into blocks by (rank, elements below, elements above) and
    the order matrix is minimised over all orderings that permute inside blocks.
    """

    below = lattice.leq.sum(axis=0)
    above = lattice.leq.sum(axis=1)
    keyed = sorted(lattice.elements, key=lambda x: (lattice.ranks[x], int(below[x]), int(above[x])))
    signature = tuple((lattice.ranks[x], int(below[x]), int(above[x])) for x in keyed)
    blocks = [list(group) for _, group in groupby(keyed, key=lambda x: (lattice.ranks[x], int(below[x]), int(above[x])))]

    best = None
    for arrangement in product(*(permutations(block) for block in blocks)):
        order = list(chain.from_iterable(arrangement))
        code = np.packbits(lattice.leq[np.ix_(order, order)]).tobytes()
        if best is None or code < best:
            best = code
    return signature, best


def is_isomorphic(first, second):
    return first.size == second.size and canonical_form(first) == canonical_form(second)

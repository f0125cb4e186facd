"""Module containing all error types for lattice_spectra
"""

# Created:   18-Oct-2026


class LatticeSpectraError(Exception):
    """General error, base of every lattice_spectra error
    """

    pass


class LatticeFormatError(LatticeSpectraError):
    """Error for a lattice document that cannot be parsed or is missing keys
    """

    pass


class LatticeTooLargeError(LatticeSpectraError):
    """Error for a lattice larger than the configured maximum size
    """

    pass


class UnknownElementError(LatticeSpectraError):
    """Error for an element label that is not declared in the lattice
    """

    def __init__(self, label):
        super().__init__('Unknown element: {}'.format(label))
        self.element = label


class NotAPosetError(LatticeSpectraError):
    """Error for an order relation with a cycle or that is not transitive
    """

    pass


class _PairError(LatticeSpectraError):

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class NoMeetError(_PairError):
    """Error for a pair of elements without a greatest lower bound
    """

    pass


class NoJoinError(_PairError):
    """Error for a pair of elements without a least upper bound
    """

    pass


class NoBottomError(LatticeSpectraError):
    """Error for an order without a minimum element
    """

    pass


class LatticeAxiomError(LatticeSpectraError):
    """Error when derived meet/join tables violate a lattice identity
    """

    pass


class NotDistributiveError(LatticeSpectraError):
    """Error for operations that require a distributive lattice
    """

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class NotAnIdealError(LatticeSpectraError):
    """Error for an element subset that is not an ideal
    """

    pass


class BottomHasNoValueError(LatticeSpectraError):
    """Error when the values of the bottom element are requested
    """

    pass


class MStarUndefinedError(LatticeSpectraError):
    """Error when the cover of the whole lattice in its ideal lattice is requested
    """

    pass


class EmptySetError(LatticeSpectraError):
    """Error for an empty subset where a nonempty one is required
    """

    pass


class NotMeetClosedError(LatticeSpectraError):
    """Error for a subset that does not generate a filter
    """

    pass


class NotPrimeError(LatticeSpectraError):
    """Error for an ideal that is required to be prime but is not
    """

    pass


class NotDecomposableError(LatticeSpectraError):
    """Error for operations that require a decomposable lattice
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotIncomparableError(LatticeSpectraError):
    """Error for a list of primes containing a comparable pair
    """

    pass


class ElementInsidePrimeError(LatticeSpectraError):
    """Error when the element to split lies inside one of the primes
    """

    pass


class TooFewPrimesError(LatticeSpectraError):
    """Error when fewer than two primes are given for disjointification
    """

    pass


class BottomElementError(LatticeSpectraError):
    """Error when the bottom element is passed where a nonzero one is required
    """

    pass


class SpectrumInconsistencyError(LatticeSpectraError):
    """Error when equivalent descriptions of an ideal class disagree
    """

    pass


class UnknownTheoremIdError(LatticeSpectraError):
    """Error for a theorem id that is not in the checker registry
    """

    pass


class UnknownImplicationIdError(LatticeSpectraError):
    """Error for an implication id that does not name a registry direction
    """

    pass


class CapExceededError(LatticeSpectraError):
    """Error for a generation request beyond the configured cap
    """

    pass


class UnknownCatalogNameError(LatticeSpectraError):
    """Error for a lattice name that is not in the catalog
    """

    pass

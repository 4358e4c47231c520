"""Exception hierarchy shared by every kmcheck module."""


class KMError(ValueError):
    """Base class for invalid input or a violated precondition."""


class NotCoprime(KMError):
    pass


class WrongParity(KMError):
    pass


class NotPairwiseCoprime(KMError):
    def __init__(self, i: int, j: int, ai: int, aj: int):
        self.indices = (i, j)
        self.pair = (ai, aj)
        super().__init__(f"not pairwise coprime ({ai},{aj}) at indices {i},{j}")


class TooFewFibers(KMError):
    pass


class BadGenerator(KMError):
    pass


class UnsupportedDimension(KMError):
    pass


class NotInSimplex(KMError):
    pass


class OutOfBox(KMError):
    pass


class InternalInconsistency(AssertionError):
    """A mathematical identity failed; never raised for bad input."""

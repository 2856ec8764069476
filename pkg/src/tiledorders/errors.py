"""Exception hierarchy shared by every module."""


class TiledOrderError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class NotSquare(TiledOrderError):
    pass


class NonzeroDiagonal(TiledOrderError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"diagonal entry mu_{i}{i} is nonzero")


class RingConditionViolated(TiledOrderError):
    """Raised with the 1-based triple (i, j, k) for which mu_ij + mu_jk < mu_ik."""

    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"mu_{i}{j} + mu_{j}{k} < mu_{i}{k} at (i, j, k) = {(i, j, k)}")


class EntryOverflow(TiledOrderError):
    pass


class DimensionMismatch(TiledOrderError):
    pass


class NotPrime(TiledOrderError):
    pass


class TooLarge(TiledOrderError):
    pass


class InvalidLocalExponent(TiledOrderError):
    def __init__(self, label, msg=""):
        self.label = label
        super().__init__(f"invalid local exponent for {label!r}{': ' + msg if msg else ''}")


class UnsupportedDimension(TiledOrderError):
    pass

"""Exception types shared across the package."""


class HermrealError(Exception):
    pass


class DivisionByZero(HermrealError, ZeroDivisionError):
    pass


class TowerMismatch(HermrealError, TypeError):
    """Operands live in fields that are not comparable in one tower."""


class NotRealEmbeddable(HermrealError):
    pass


class InvalidAutomorphism(HermrealError):
    pass


class InvalidPresentation(HermrealError, ValueError):
    pass


class HostMismatch(HermrealError, TypeError):
    pass


class ZeroElement(HermrealError, ValueError):
    pass


class NotInK(HermrealError):
    """A value expected to lie in the maximal subfield K does not."""


class SearchExhausted(HermrealError):
    pass


class BasisDecompositionFailure(HermrealError):
    pass


class SingularGram(HermrealError):
    pass


class NotInvertible(HermrealError):
    pass


class WrongCase(HermrealError, ValueError):
    pass


class NotHermitian(HermrealError, ValueError):
    pass


class SingularTwist(HermrealError, ValueError):
    pass


class HypothesisViolated(HermrealError):
    pass

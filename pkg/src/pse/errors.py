"""Exception hierarchy shared by every module of the package."""


class PSEError(ValueError):
    """Base class for invalid inputs and failed constructions."""


# instance validation
class SelfLoop(PSEError):
    pass


class DuplicateEdge(PSEError):
    pass


class NotPermutationGrid(PSEError):
    pass


class NotBijective(PSEError):
    pass


class SizeMismatch(PSEError):
    pass


# structural preconditions of the constructions
class NotATree(PSEError):
    pass


class NotBinaryTree(PSEError):
    pass


class NotPathOrCycle(PSEError):
    pass


class CycleTooSmall(PSEError):
    pass


class DegreeTooHigh(PSEError):
    pass


class NotPerfectMatching(PSEError):
    pass


class InvalidEpsilon(PSEError):
    pass


class MalformedDrawing(PSEError):
    pass


class TooLarge(PSEError):
    """Raised by the brute-force oracles when an enumeration guard trips."""

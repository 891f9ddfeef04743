"""Exception types shared by every module in the package."""


class CenterSetError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidEdgeError(CenterSetError):
    """An edge is a loop, repeats another edge, or has an endpoint out of range."""


class DisconnectedError(CenterSetError):
    """The input graph is not connected."""


class EmptyProfileError(CenterSetError):
    """A vertex profile must contain at least one vertex."""


class TooLargeError(CenterSetError):
    """The instance exceeds the exhaustive-enumeration cap."""


class BadParamsError(CenterSetError):
    """Parameters are outside the supported range for the operation."""


class NotUEVError(CenterSetError):
    """The graph has a vertex with more than one eccentric vertex."""


class NotBlockGraphError(CenterSetError):
    """The graph has a block that is not a clique."""


class NotSymmetricEvenError(CenterSetError):
    """The operation is only defined for symmetric even graphs."""


class NotDominatingError(CenterSetError):
    """The profile must dominate the graph."""


class GenerationFailedError(CenterSetError):
    """Random generation did not produce a valid graph within the attempt budget."""

"""Exception hierarchy shared by all segdraw modules."""


class SegdrawError(Exception):
    """Base class for every error raised by the library."""


class DegenerateInput(SegdrawError, ValueError):
    pass


class NotPlanarEmbedding(SegdrawError):
    pass


class Disconnected(SegdrawError):
    pass


class NotSimple(SegdrawError):
    pass


class NotBiconnected(SegdrawError):
    pass


class NotACycle(SegdrawError):
    pass


class PathNotInternal(SegdrawError):
    pass


class NoStrictlyInternalFace(SegdrawError):
    pass


class NotInternally3Connected(SegdrawError):
    pass


class PreconditionViolated(SegdrawError):
    pass


class NotCompatible(SegdrawError):
    pass


class OuterFaceMismatch(SegdrawError):
    pass


class NotACactus(SegdrawError):
    pass


class CoincidentVertices(SegdrawError):
    pass


class DomainTooSmall(SegdrawError, ValueError):
    pass


class NotOuterpath(SegdrawError):
    pass


class BadStackingOrder(SegdrawError):
    pass


class BadParameter(SegdrawError, ValueError):
    pass

"""Exception types raised across the package."""


class RootConfigError(ValueError):
    """Base class for every error raised by rootconfig."""


class ZeroPolynomial(RootConfigError):
    pass


class DivisionByZeroPoly(RootConfigError, ZeroDivisionError):
    pass


class DegreeTooSmall(RootConfigError):
    pass


class BadInterval(RootConfigError):
    pass


class EndpointIsRoot(RootConfigError):
    pass


class ZeroIsRoot(RootConfigError):
    pass


class NotSquarefree(RootConfigError):
    pass


class NotInDoubleCase(RootConfigError):
    pass


class NotInTripleCase(RootConfigError):
    pass


class NotInTwoDoubleCase(RootConfigError):
    pass


class NotQuadruple(RootConfigError):
    pass


class UnrealizableLabel(RootConfigError):
    pass


class InternalInconsistency(RuntimeError):
    """A classification result contradicted an exact identity; always a bug."""

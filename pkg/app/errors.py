"""Exception hierarchy for vgalg."""


class VGAlgError(Exception):
    """Base exception for vgalg errors."""

    pass


class ConfigError(VGAlgError):
    """Invalid run configuration or configuration file."""

    pass


class BoundExceededError(VGAlgError):
    """A request goes past the configured desk-scale bounds."""

    pass


class SizeMismatchError(VGAlgError):
    """Operands live in semigroups of different sizes."""

    pass


class GroupMismatchError(VGAlgError):
    """Operands carry labels from different finite groups."""

    pass


class PartitionError(VGAlgError):
    """A partition or multipartition argument violates a precondition."""

    pass


class GroupTableError(VGAlgError):
    """A group definition failed validation.

    Attributes:
        location: Where the first failure was found, e.g. ``mult[2][3]``.
    """

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class SolverError(VGAlgError):
    """No polynomial in the p# generators reproduces a function within its degree bound."""

    pass


class FitError(VGAlgError):
    """A rational-function fit failed its validation points."""

    pass


class DivergenceError(VGAlgError):
    """A truncated coefficient has no finite limit."""

    pass


class NonScalarError(VGAlgError):
    """A central eigenvalue was requested for an image that is not scalar."""

    pass


class WindowError(VGAlgError):
    """A window element violates one of its invariants.

    Attributes:
        r: The size at which the violation was detected.
    """

    def __init__(self, r: int, message: str):
        super().__init__(f"r={r}: {message}")
        self.r = r


class ParseError(ConfigError):
    """A command-line literal (partition, family, shifted function) could not be parsed."""

    pass

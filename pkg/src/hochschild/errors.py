"""Exception types shared across the package.

The CLI maps each family onto a distinct exit code, so raise the most
specific class that applies.
"""


class HochschildError(Exception):
    """Base class for every error raised by this package."""


class RingError(HochschildError, ValueError):
    """Ring mismatch or an operation the ring does not support."""


class NotInvertibleError(RingError, ZeroDivisionError):
    pass


class ScalarParseError(RingError):
    pass


class ShapeError(HochschildError, ValueError):
    """Matrix or morphism dimensions do not fit together."""


class WordMismatchError(ShapeError):
    """Composition of morphisms whose tensor words differ.

    Flattened ranks may agree; the bracketing does not, so an explicit
    associator is required.
    """


class InstanceError(HochschildError, ValueError):
    """Malformed instance file or category data (bad JSON, bad cocycle, ...)."""


class AxiomFailure(HochschildError):
    """Structure maps fail a defining diagram."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ResourceCeilingError(HochschildError):
    """A hom-space would exceed the configured rank ceiling."""


class InvariantBreach(HochschildError, AssertionError):
    """An internal invariant (d∘d = 0, U·A·V = D, ...) failed."""

from collections.abc import Mapping
from typing import Any, ClassVar


class PolarMapsError(Exception):
    """
    Base class of every error the library raises on purpose.

    Attributes:
        exit_status: Process exit status the cli uses for this error class.
        error_kind: Stable machine-readable name reported in JSON.
        context: Structured details (offending degree, point, limits, ...).
    """

    exit_status: ClassVar[int] = 1
    error_kind: ClassVar[str] = "error"

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context: Mapping[str, Any] = context


class ParseError(PolarMapsError, ValueError):
    exit_status = 2
    error_kind = "parse"

    def __init__(self, message: str, position: int, **context: Any) -> None:
        super().__init__(f"{message} (at byte {position})", position=position, **context)
        self.position = position


class PreconditionError(PolarMapsError, ValueError):
    exit_status = 3
    error_kind = "precondition"


class DimensionError(PreconditionError):
    error_kind = "dimension"


class RangeError(PreconditionError):
    error_kind = "range"


class ZeroPolynomialError(PreconditionError):
    error_kind = "zero_polynomial"


class UndefinedDegreeError(ZeroPolynomialError):
    error_kind = "undefined_degree"


class InhomogeneousError(PreconditionError):
    error_kind = "inhomogeneous"


class PolarMapUndefinedError(PreconditionError):
    """The polar map has no value at the point: it lies in the base locus."""

    error_kind = "polar_map_undefined"


class ResourceLimitError(PolarMapsError, RuntimeError):
    exit_status = 4
    error_kind = "resource"


class DegenerateError(PolarMapsError, RuntimeError):
    exit_status = 5
    error_kind = "degenerate"


class CascadeViolationError(PolarMapsError, AssertionError):
    """A theorem checked at runtime failed; this always indicates a bug."""

    exit_status = 70
    error_kind = "internal"

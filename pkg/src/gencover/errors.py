"""Exception types shared across the package."""


class GencoverError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeCharacteristic(GencoverError, ValueError):
    """Field characteristic must be prime."""


class DegreeOutOfRange(GencoverError, ValueError):
    """Extension degree or construction parameter outside the supported range."""


class FieldMismatch(GencoverError, ValueError):
    """Operands belong to different fields."""


class CharacteristicMismatch(GencoverError, ValueError):
    """Embedding requested between fields of different characteristic."""


class NonPrimeBaseField(GencoverError, ValueError):
    """Operation requires a prime base field."""


class DimensionMismatch(GencoverError, ValueError):
    """Matrix or vector shapes are incompatible."""


class EmptyMatrix(GencoverError, ValueError):
    """A matrix with zero rows or columns where content is required."""


class PositionOutOfRange(GencoverError, IndexError):
    """Coordinate index outside the code length, or length too small."""


class LengthMismatch(GencoverError, ValueError):
    """Code operands must have equal length."""


class DegenerateCode(GencoverError, ValueError):
    """Operation not defined for the zero code (dimension 0)."""


class RadiusOutOfRange(GencoverError, ValueError):
    """Ball radius outside [0, n]."""


class SearchTooLarge(GencoverError, RuntimeError):
    """An exhaustive search would exceed its configured cap."""


class SyndromeSpaceTooLarge(SearchTooLarge):
    """The syndrome space exceeds the configured state cap."""


class MethodInfeasible(GencoverError, RuntimeError):
    """Requested computation method infeasible at these parameters."""


class MethodDisagreement(GencoverError, RuntimeError):
    """Cross-checked computation methods returned different values."""


class TOutOfRange(GencoverError, ValueError):
    """Order parameter t outside the valid range for the code."""


class DomainError(GencoverError, ValueError):
    """Numeric argument outside the function's domain."""


class NoSignChange(GencoverError, RuntimeError):
    """Root bracketing failed: no sign change over the search interval."""


class Infeasible(GencoverError, RuntimeError):
    """No column set can span the requested vectors."""


class InputFormatError(GencoverError, ValueError):
    """Malformed code, syndrome, or curve file."""

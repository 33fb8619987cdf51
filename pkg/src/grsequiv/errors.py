"""Exception hierarchy.

Every error carries an optional ``index`` (or ``indices``) so that the CLI can
report the offending position, e.g. ``ZeroMultiplier index=2``.
"""


class GrsError(ValueError):
    """Base class for all library errors."""

    def __init__(self, message="", *, index=None, indices=None):
        super().__init__(message)
        self.message = message
        self.index = index
        self.indices = tuple(indices) if indices is not None else None

    def diagnostic(self):
        parts = [type(self).__name__]
        if self.index is not None:
            parts.append(f"index={self.index}")
        if self.indices is not None:
            parts.append("indices=" + ",".join(map(str, self.indices)))
        head = " ".join(parts)
        return f"{head}: {self.message}" if self.message else head


# field
class NotPrime(GrsError):
    pass


class NotIrreducible(GrsError):
    pass


class DegreeMismatch(GrsError):
    pass


class FieldMismatch(GrsError):
    pass


class ElementOutOfRange(FieldMismatch):
    """An int outside range(q) was used as a field element."""


class DivisionByZero(GrsError, ZeroDivisionError):
    pass


# poly
class DegreeTooHigh(GrsError):
    pass


# codes
class DuplicateEvaluationPoint(GrsError):
    pass


class ZeroMultiplier(GrsError):
    pass


class BadDimension(GrsError):
    pass


class LengthExceedsField(GrsError):
    pass


class BadMessageLength(GrsError):
    pass


class EnumerationTooLarge(GrsError):
    pass


# transform
class ZeroLambda(GrsError):
    pass


class LengthTooShort(GrsError):
    pass


class NoGammaAvailable(GrsError):
    pass


class GammaCollision(GrsError):
    pass


# documents
class DocumentError(GrsError):
    pass

"""Exception types shared across the engine."""

from __future__ import annotations


class OodnError(Exception):
    """Base class for all engine errors."""


class TooFewInputs(OodnError):
    """An exploiter was given fewer input classes than it requires."""


class DoesNotExist(OodnError):
    """The requested class does not exist for the given inputs.

    Raised when an existence condition fails: intersection without a
    common property, difference that removes every member, symmetric
    difference of structurally identical classes.  ``details`` carries
    the names of any members that overlapped but could not rescue the
    result (e.g. methods common to all inputs of an intersection).
    """

    def __init__(self, message: str, details: tuple[str, ...] = ()) -> None:
        super().__init__(message)
        self.details = tuple(details)


class DuplicateTypes(OodnError):
    """Two input types of an assembly are equivalent."""


class InvalidName(OodnError):
    """A class name does not match the identifier pattern."""


class ParseError(OodnError):
    """A file is not well-formed JSON."""


class SchemaError(OodnError):
    """A parsed file does not match the class file schema."""


class ValidationError(OodnError):
    """A class breaches one or more of its invariants."""

    def __init__(self, message: str, violations: tuple[str, ...] = ()) -> None:
        super().__init__(message)
        self.violations = tuple(violations)

    def __str__(self) -> str:
        base = super().__str__()
        if not self.violations:
            return base
        return base + "\n" + "\n".join(f"  - {v}" for v in self.violations)


class RegistryError(OodnError):
    """A registry directory is inconsistent (duplicate or colliding names)."""

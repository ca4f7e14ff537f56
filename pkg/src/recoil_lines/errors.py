"""Exception hierarchy.

The CLI maps these onto exit codes: input errors -> 2, physics errors -> 3,
verification failures -> 4.
"""


class RecoilLinesError(Exception):
    """Base class for every error raised by this package."""


class InputError(RecoilLinesError):
    """Bad or missing user input (files, names, flags)."""


class ParseError(InputError):
    """A data file line could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DataError(InputError):
    """Parsed data violates a record invariant (duplicates, bad values)."""


class PhysicsError(RecoilLinesError, ValueError):
    """Argument outside the domain of a physical formula."""


class DomainError(PhysicsError):
    pass


class RegimeError(PhysicsError):
    """The non-relativistic recoil regime (hbar*omega0 << 2mc^2) does not hold."""


class SingularityError(PhysicsError):
    pass


class AccuracyError(RecoilLinesError, ArithmeticError):
    """A numerical oracle failed to reach its tolerance within budget."""

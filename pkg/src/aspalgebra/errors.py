"""Exception types shared across the package."""

from __future__ import annotations


class AspAlgebraError(Exception):
    """Base class for every error this package raises on purpose."""


class AlphabetMismatchError(AspAlgebraError, ValueError):
    """Two operands live over different alphabets, or an atom falls outside one."""


class NotHornError(AspAlgebraError, ValueError):
    """An operation defined only for Horn programs was given a non-Horn one."""


class NotBijectiveError(AspAlgebraError, ValueError):
    """A supposed permutation of the alphabet is not a bijection."""


class AlphabetTooLargeError(AspAlgebraError, ValueError):
    """An operation that enumerates all interpretations was given too many atoms."""

    def __init__(self, size: int, limit: int) -> None:
        super().__init__(
            f"alphabet has {size} atoms; enumeration is capped at {limit} "
            f"(raise max_atoms to override)"
        )
        self.size = size
        self.limit = limit


class InternalMismatchError(AspAlgebraError, RuntimeError):
    """Two computation routes that must agree produced different results.

    This is never a user error; it means one of the library's validated
    identities failed on a concrete input.
    """


class ParseError(AspAlgebraError, ValueError):
    """Malformed program text; carries a 1-based line/column when known."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        column: int | None = None,
        origin: str | None = None,
    ) -> None:
        self.bare_message = message
        self.line = line
        self.column = column
        self.origin = origin
        where = ""
        if line is not None:
            where = f"{line}:{column}: " if column is not None else f"{line}: "
        if origin:
            where = f"{origin}:{where}" if where else f"{origin}: "
        super().__init__(where + message)


class ReservedAtomError(ParseError):
    """The reserved truth-constant names `t` and `f` cannot be used as atoms."""


class UndeclaredAtomError(ParseError):
    """An atom was used that the governing alphabet does not declare."""

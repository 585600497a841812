"""Exception hierarchy. CLI exit codes: usage/parse errors map to 2, cap
violations to 3, verification inconsistencies to 1."""


class PermlatError(Exception):
    """Base for all library errors."""


class InvalidPermutationError(PermlatError):
    pass


class DegreeMismatchError(PermlatError):
    pass


class CapExceededError(PermlatError):
    """A configured size cap was exceeded; carries the cap and the offender."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class GroupOrderCapError(CapExceededError):
    pass


class LatticeCapError(CapExceededError):
    pass


class NotNormalError(PermlatError):
    pass


class NotPGroupError(PermlatError):
    pass


class NotAutomorphismError(PermlatError):
    """A generator-image list does not extend to an automorphism."""


class ActionRelationError(PermlatError):
    """An action map does not respect the acting group's relations."""


class BadTableError(PermlatError):
    """A multiplication table fails the Latin-square or associativity check."""


class GroupFileError(PermlatError):
    """Parse error in a group spec file; carries line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column

"""Exception types shared by the library and the command line."""


class UsageError(ValueError):
    """Bad input: malformed text, out-of-range index, mismatched fields."""


class FieldMismatchError(UsageError):
    pass


class OracleBudgetError(UsageError):
    """An exhaustive search was asked to go beyond its fixed budget."""


class InvariantError(RuntimeError):
    """A structural property that must hold after a computation did not."""

"""Exception hierarchy shared by the library and the command line."""


class GiniError(ValueError):
    """Base class for domain errors raised by this package.

    Every subclass carries a stable ``code`` used in machine-readable CLI output.
    """

    code = "domain_error"


class PartitionError(GiniError):
    code = "invalid_partition"


class SizeMismatchError(GiniError):
    code = "size_mismatch"


class TooManyPartsError(GiniError):
    code = "too_many_parts"


class ChargeError(GiniError):
    code = "invalid_charge_word"


class DomainError(GiniError):
    code = "out_of_domain"


class CharacterError(GiniError):
    code = "invalid_character"


class ConsistencyError(RuntimeError):
    """An internal cross-check failed. Indicates a bug, never a user error."""

    code = "internal_consistency"

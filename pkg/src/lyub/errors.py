"""Exception hierarchy and global resource caps."""

# Everything that enumerates {0,1}^n is exponential in n; this cap keeps the
# worst case around 16M masks.
MAX_VARIABLES = 24

# The Taylor complex has 2^q basis elements for q generators.
MAX_TAYLOR_GENERATORS = 20


class LyubError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LyubError):
    """Malformed or out-of-range user input."""


class DomainError(LyubError):
    """Operation is mathematically undefined for this value."""


class ContractError(LyubError):
    """An internal invariant failed (d∘d != 0, non-commuting map, ...)."""


class ResourceError(LyubError):
    """A hard resource cap would be exceeded."""

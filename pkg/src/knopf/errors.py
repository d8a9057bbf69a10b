"""Error taxonomy shared across the workbench.

InputError covers malformed or ill-typed input (CLI exit 2); CheckFailure covers
well-formed inputs whose mathematical expectations fail (CLI exit 1); the
remaining classes mark conditions the implementation refuses to guess about.
"""


class KnopfError(Exception):
    """Base class for all workbench errors."""


class InputError(KnopfError):
    """Malformed input: bad JSON, wrong shapes, non-prime modulus, unknown names."""


class CheckFailure(KnopfError):
    """A requested verification or catalog expectation did not hold."""


class InconsistencyError(KnopfError):
    """Internal invariant violated (e.g. integral space not one-dimensional)."""


class UnsupportedCaseError(KnopfError):
    """Input is valid but outside the implemented cases (e.g. modular Molien)."""


class UndecidedError(KnopfError):
    """Search budget exhausted without a sound verdict; never guessed."""


class NonTerminationError(KnopfError):
    """Bounded rewriting exceeded its step budget (straightening guard)."""

"""Exception types shared across the package."""


class CovgranError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CovgranError):
    """A document does not match the expected file format."""


class InputError(CovgranError):
    """A structurally invalid value: unknown element, universe mismatch,
    capacity overflow, or a family violating a constructor invariant."""


class AxiomPreconditionError(CovgranError):
    """An operator table lacks the axioms required by the requested operation."""

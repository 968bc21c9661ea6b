"""Exception hierarchy shared across the package."""


class SimpletsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SimpletsError, ValueError):
    """Malformed caller input: bad vertex ids, empty facets, parameters out of range."""


class StructuralError(SimpletsError):
    """The complex violates a structural precondition (disconnected, too small, edgeless)."""


class IntegrityError(SimpletsError):
    """Internal consistency failure, e.g. a canonical key missing from a complete catalog."""

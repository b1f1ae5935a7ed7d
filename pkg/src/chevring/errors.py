"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input: bad integers, unknown families,
    mismatched polynomial contexts, out-of-range indices."""


class PreconditionError(ValueError):
    """A mathematical hypothesis of the requested computation fails,
    e.g. l equal to the field characteristic, a torsion prime, or a missing
    root of unity.  The message names the violated hypothesis."""


class ResourceLimitError(RuntimeError):
    """An oracle instance exceeds its configured memory budget."""

    def __init__(self, message: str, degree: int | None = None, count: int | None = None):
        super().__init__(message)
        self.degree = degree
        self.count = count

"""Exception types raised by realqm."""


class ValidationError(ValueError):
    """Input does not satisfy the structural contract of an operation."""


class DimensionMismatch(ValidationError):
    """Operands have incompatible shapes."""


class BlockStructureViolation(ValidationError):
    """A real matrix is not of the form [[R, -S], [S, R]].

    ``max_asymmetry`` is the largest entrywise deviation from that form.
    """

    def __init__(self, max_asymmetry, message=None):
        self.max_asymmetry = float(max_asymmetry)
        if message is None:
            message = f"block structure violated (max asymmetry {self.max_asymmetry:.3g})"
        super().__init__(message)

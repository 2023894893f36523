"""
Exceptions raised by the library.

All of them derive from :class:`ValueError` so callers that only
care about bad input can keep catching that.
"""


class AbelFourierError(ValueError):
    pass


class GroupError(AbelFourierError):
    """Malformed group spec, overflow of the group order or invalid residues"""
    pass


class OwnerMismatchError(AbelFourierError):
    """Operands belong to different groups or have a different arity"""
    pass


class ExponentError(AbelFourierError):
    pass


class WitnessError(AbelFourierError):
    pass


class UnsupportedNormError(AbelFourierError):
    pass


class ConvergenceError(AbelFourierError):
    """
    An iterative method hit its iteration cap.

    Args:
        message (str): description
        residual (float): last residual observed

    """

    def __init__(self, message, residual):
        super().__init__(message, residual)
        self.message = message
        self.residual = residual

    def __str__(self):
        return '{} (residual {:.3e})'.format(self.message, self.residual)


class MeasureError(AbelFourierError):
    pass


class SuiteError(AbelFourierError):
    pass

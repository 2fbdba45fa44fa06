"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Input size does not match the declared qubit count."""


class NotATensorError(ValueError):
    """Diagonal does not factor as (n-1)-qubit diagonal x one-qubit diagonal."""


class SingularSystemError(ArithmeticError):
    """Linear solve hit a singular pivot or an unacceptable residual."""


class NotDiagonalError(ValueError):
    """Circuit permutes basis states, so it has no diagonal representation."""


class UnsupportedGateError(ValueError):
    """Export target cannot express a gate kind present in the circuit."""


class SynthesisError(RuntimeError):
    """Internal consistency check failed during synthesis."""


class FormatError(ValueError):
    """Malformed serialized diagonal or circuit document."""

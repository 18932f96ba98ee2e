"""Exception types shared across the gapflow solvers."""


class GapflowError(Exception):
    """Base class for all gapflow errors."""


class DegenerateChart(GapflowError):
    """Surface parametrization is singular (tangents collinear or metric not positive)."""


class VariantMismatch(GapflowError):
    """Boundary data variant does not match the requested operation."""


class Xi3OutOfRange(GapflowError):
    """Cross-gap coordinate outside [0, 1]."""


class MissingBoundaryData(GapflowError):
    """A coefficient requiring friction/traction data was requested without it."""


class NonConvergence(GapflowError):
    """Picard iteration failed to reach tolerance.

    Carries the iteration count and the residual history so callers can
    produce a machine-readable failure report.
    """

    def __init__(self, message, iterations, residual_history):
        super().__init__(message)
        self.iterations = iterations
        self.residual_history = list(residual_history)


class SingularOperator(GapflowError):
    """Discrete elliptic system is rank deficient beyond the expected gauge."""


class IncompatibleTargets(GapflowError):
    """Manufactured target fields violate the mass-closure constraint."""


class InsufficientPoints(GapflowError):
    """Order estimation needs at least two (error, parameter) pairs."""


class SchemaError(GapflowError):
    """Problem configuration text violates the key=value schema."""

    def __init__(self, message, line=None, key=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if key is not None:
            loc.append(f"key '{key}'")
        suffix = f" ({', '.join(loc)})" if loc else ""
        super().__init__(message + suffix)
        self.line = line
        self.key = key


class UnknownRegistryName(GapflowError):
    """Config references a chart/gap family name that is not registered."""


class IoError(GapflowError):
    """Snapshot export/import failure (non-finite data, malformed file, ...)."""

"""
Exception classes for monopsono.

Every library error derives from ``MonopsonoError`` so the command line
driver can map each failure class to a single-line diagnostic.
"""

from typing import Optional, Sequence, Tuple


class MonopsonoError(Exception):
    """Base class for every error raised by the library."""

    label = "error"


class ParseError(MonopsonoError):
    """Raised to annotate a single-row error while reading an input file."""

    label = "parse error"

    def __init__(
        self,
        message: str,
        row_number: Optional[int] = None,
        field_name: Optional[str] = None,
    ):
        self.row_number = row_number
        self.field_name = field_name
        super().__init__(message)

    def __str__(self) -> str:
        message = super().__str__()
        location = []
        if self.row_number is not None:
            location.append(f"row {self.row_number}")
        if self.field_name is not None:
            location.append(f"column {self.field_name}")
        if location:
            return f"{message} ({', '.join(location)})"
        return message


class SchemaError(ParseError):
    """Raised when an input file header does not match its declared schema."""


class ConfigurationError(MonopsonoError):
    """Raised when settings, specification or pipeline configuration is invalid."""

    label = "configuration error"


class DomainError(MonopsonoError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""

    label = "domain error"


class EstimationError(MonopsonoError):
    """Raised when a regression cannot be estimated."""

    label = "estimation error"


class ConvergenceError(EstimationError):
    """Fixed-effect absorption did not converge."""

    def __init__(self, residual_change: float, iterations: int):
        self.residual_change = residual_change
        self.iterations = iterations
        super().__init__(
            f"Fixed-effect absorption did not converge after {iterations} "
            f"iterations (max change {residual_change:.3e})"
        )


class CollinearityError(EstimationError):
    """The design matrix is rank deficient."""

    def __init__(self, column: str):
        self.column = column
        super().__init__(f"Regressor '{column}' is collinear with the other regressors")


class WeakInstrumentError(EstimationError):
    """The first stage does not identify the endogenous regressors."""


class EmptySampleError(EstimationError):
    """No observations survived the sample restrictions."""

    def __init__(self, message: str, trace: Sequence[Tuple[str, int]] = ()):
        self.trace = list(trace)
        steps = ", ".join(f"{step}: {rows}" for step, rows in self.trace)
        super().__init__(f"{message} [{steps}]" if steps else message)


class BootstrapError(EstimationError):
    """Too many bootstrap replicates failed."""

    def __init__(self, failures: int, replications: int):
        self.failures = failures
        self.replications = replications
        super().__init__(
            f"{failures} of {replications} bootstrap replicates failed"
        )


class NonBindingMinimumWageError(EstimationError):
    """The wage elasticity is too close to zero to normalize by."""

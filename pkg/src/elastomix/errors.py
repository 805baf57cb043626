"""Exception hierarchy shared across the toolkit.

Three families matter to the CLI exit-code contract: validation errors
(exit 2), I/O and parse errors (exit 3), and infeasible-target errors
(exit 4).
"""


class ElastomixError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class ValidationError(ElastomixError):
    """User input violates a documented precondition or invariant."""

    code = "validation"


class SumViolation(ValidationError):
    code = "sum_violation"

    def __init__(self, total: int):
        self.total = total
        super().__init__(f"component percentages must sum to 100, got {total}")


class BoundViolation(ValidationError):
    code = "bound_violation"

    def __init__(self, component: str, value: float, limit: float, side: str):
        self.component = component
        self.value = value
        self.limit = limit
        self.side = side
        super().__init__(
            f"{component}={value} violates {side} bound {limit}"
        )


class EmptySpace(ValidationError):
    code = "empty_space"


class OutOfRange(ValidationError):
    code = "out_of_range"


class ZeroTransmission(ValidationError):
    code = "zero_transmission"


class RankDeficient(ValidationError):
    code = "rank_deficient"

    def __init__(self, columns):
        self.columns = list(columns)
        super().__init__(f"design matrix is rank deficient; collinear columns: {self.columns}")


class Underdetermined(ValidationError):
    code = "underdetermined"


class MissingTarget(ValidationError):
    code = "missing_target"


class NonPositiveDenominator(ValidationError):
    code = "non_positive_denominator"


class MismatchedSpan(ValidationError):
    code = "mismatched_span"


class DegenerateX(ValidationError):
    code = "degenerate_x"


class BadElement(ValidationError):
    code = "bad_element"


class UnknownModel(ValidationError):
    code = "unknown_model"


class InfeasibleError(ElastomixError):
    """The request is well formed but no design can satisfy it."""

    code = "infeasible"


class AllZeroDesirability(InfeasibleError):
    code = "all_zero_desirability"

    def __init__(self, diagnostics: dict):
        self.diagnostics = diagnostics
        super().__init__(
            "no lattice composition has positive overall desirability; "
            + "; ".join(f"{k}: {v}" for k, v in diagnostics.items())
        )


class EmptyWindow(InfeasibleError):
    code = "empty_window"


class IngestError(ElastomixError):
    """File-level ingestion failure."""

    code = "ingest"


class ParseError(IngestError):
    code = "parse_error"

    def __init__(self, path, line: int, column: int | None, message: str):
        self.path = str(path)
        self.line = line
        self.column = column
        where = f"{self.path}:{line}" + (f":{column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


class UnknownLabel(IngestError):
    code = "unknown_label"

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"sample label {label!r} is not part of the sample plan")


class MissingBiasColumn(IngestError):
    code = "missing_bias_column"

"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Raised when a graph file is malformed. Carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class IsolatedVertexError(ValueError):
    """Raised when an operation requires a graph without isolated vertices."""


class OracleLimitError(ValueError):
    """Raised when a brute-force oracle is asked to handle a graph above its size limit."""

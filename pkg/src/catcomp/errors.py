"""Exception types shared by every catcomp module."""

from __future__ import annotations


class StructuralError(ValueError):
    """Raised when data is malformed: bad indices, mistyped cells, non-parallel functors."""


class ResourceError(RuntimeError):
    """Raised when an enumeration would exceed a configured budget."""


class PreconditionError(ValueError):
    """Raised when an operation refuses input that fails its stated precondition."""


class ConfigError(ValueError):
    """Raised when settings files or environment overrides are invalid."""


class ParseError(ValueError):
    """Raised when a text presentation cannot be parsed or resolved."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(f"{message}{where}")

"""Exception hierarchy.

Each class carries the CLI exit status of its failure class so shell
pipelines can tell bad input from a broken invariant.
"""

from __future__ import annotations


class OuterbookError(Exception):
    exit_code = 1


class ParseError(OuterbookError):
    """Malformed document. ``line`` and ``column`` are 1-based when known."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ValidationError(OuterbookError):
    exit_code = 3


class GraphError(ValidationError):
    """Self-loop, duplicate edge, or endpoint out of range."""


class NotBiconnected(ValidationError):
    pass


class NotOuterplanar(ValidationError):
    pass


class NotACycle(ValidationError):
    pass


class DomainMismatch(ValidationError):
    """Certificate mentions vertices or edges the graph does not have."""


class InvalidStep(ValidationError):
    pass


class OrderMismatch(ValidationError):
    pass


class RotationInvalid(ValidationError):
    pass


class InvalidCertificate(ValidationError):
    pass


class StartNotDegree2(ValidationError):
    pass


class UnknownFamily(ValidationError):
    pass


class SearchLimitError(OuterbookError):
    exit_code = 4


class Infeasible(SearchLimitError):
    pass


class CapExceeded(SearchLimitError):
    pass


class InvariantError(OuterbookError):
    """A condition the construction guarantees did not hold."""

    exit_code = 5


class NoReduction(InvariantError):
    pass


class NoFreePage(InvariantError):
    pass


class CollisionUnresolvable(InvariantError):
    pass

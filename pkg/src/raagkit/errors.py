"""Exception hierarchy; the CLI maps each class to an exit code."""


class RaagError(Exception):
    exit_code = 1


class GraphError(RaagError, ValueError):
    """Malformed graph input or an invalid vertex/edge reference."""


class GuardExceeded(RaagError):
    """Subset enumeration requested beyond the vertex-count guard."""

    exit_code = 2


class InvariantViolation(RaagError, ArithmeticError):
    """A computed quantity broke a mathematical guarantee; indicates a bug
    or an input that did not come from a graph."""

    exit_code = 3

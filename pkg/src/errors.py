"""Exception hierarchy shared by the graph, algebra, spectral and theorem layers."""


class VertexEnergyError(Exception):
    """Base class for every error raised by this package."""


class GraphError(VertexEnergyError, ValueError):
    """Structural precondition failure (bad index, missing edge, ...)."""


class EdgeListParseError(GraphError):
    """Edge-list document does not conform to the format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class NotBipartiteError(GraphError):
    """Operation requires a graph without odd cycles."""


class NotATreeError(GraphError):
    """Operation requires a connected acyclic graph."""


class ConvergenceError(VertexEnergyError):
    """Iterative numerical method hit its iteration or depth cap."""


class ConsistencyError(VertexEnergyError):
    """Two routes to the same quantity disagree; signals an implementation bug."""


class GuardExceededError(VertexEnergyError):
    """Input exceeds a size guard of an exact (exponential or big-integer) routine."""


class UnknownSuiteError(VertexEnergyError, KeyError):
    """Verification suite name is not registered."""

    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__(f"unknown suite '{name}'; valid suites: {', '.join(known)}")

    def __str__(self) -> str:
        return self.args[0]

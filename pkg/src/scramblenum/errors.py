"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph, scramble or decomposition input."""


class SizeLimitError(GraphError):
    """Input exceeds the desk-scale bound of an exhaustive routine."""


class SearchLimitError(RuntimeError):
    """A search exceeded its state budget."""

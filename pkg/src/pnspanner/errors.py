"""Exception types shared across the package."""


class PnSpannerError(Exception):
    """Base class for all library errors."""


class PointFileError(PnSpannerError):
    """A point-set file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionMismatchError(PointFileError):
    """A row's arity disagrees with the declared or inferred dimension."""


class DuplicatePointError(PnSpannerError):
    """Two points in a universe coincide, which breaks the metric axioms."""

    def __init__(self, first, second):
        super().__init__(f"duplicate points: index {first} equals index {second}")
        self.first = first
        self.second = second


class GraphFileError(PnSpannerError):
    """A graph file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParameterError(PnSpannerError):
    """A numeric parameter is outside its valid range."""


class DegenerateInputError(PnSpannerError):
    """Input admits no triangulation (fewer than 3 points or all collinear)."""


class UnsupportedDimensionError(PnSpannerError):
    """Operation requires a specific dimension (triangulation needs dim 2)."""


class DisconnectedGraphError(PnSpannerError):
    """Stretch is undefined: some ordered pair has no connecting path."""

    def __init__(self, pair):
        super().__init__(f"graph is not (strongly) connected: no path {pair[0]} -> {pair[1]}")
        self.pair = pair


class NotPnGraphError(PnSpannerError):
    """Greedy routing over all pairs requires the PN property to hold."""

    def __init__(self, witness):
        super().__init__(
            f"graph is not proximal-navigable: from {witness[0]} no out-neighbor "
            f"is strictly closer to {witness[1]}"
        )
        self.witness = witness

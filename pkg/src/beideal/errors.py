"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Raised when a graph description is malformed or violates an invariant."""


class CapacityError(RuntimeError):
    """Raised when a computation would exceed a configured resource bound.

    Subset enumeration is exponential in the number of candidate vertices and
    clique enumeration can be exponential in the worst case, so both are
    guarded.  CLI callers map this to a dedicated exit code.
    """

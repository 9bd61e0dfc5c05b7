"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class DegenerateGeometryError(ValueError):
    """A polytope or simplex lacks the dimension an operation requires."""


class InternalConsistencyError(RuntimeError):
    """A computed quantity violated an invariant that must always hold.

    Raising this means the library itself is wrong (for example a negative
    h* coefficient), never that the input was bad.
    """

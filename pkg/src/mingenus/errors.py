"""Exception types shared across the package."""


class MinGenusError(Exception):
    """Base class for all package errors."""


class LatticeError(MinGenusError, ValueError):
    """Malformed Gram matrix (not square, not symmetric, non-integer)."""


class NotUnimodularError(LatticeError):
    """Gram matrix has determinant other than +1 or -1."""

    def __init__(self, det: int):
        super().__init__(f"Gram matrix is not unimodular (det = {det})")
        self.det = det


class DimensionError(MinGenusError, ValueError):
    """A class vector does not match the lattice rank."""


class PreconditionError(MinGenusError, ValueError):
    """Inputs violate the hypotheses an operation needs."""


class BudgetExhausted(MinGenusError, RuntimeError):
    """A search hit its node or pairing cap before reaching an answer.

    ``state`` carries whatever partial scan information the raiser had, e.g.
    the last pairing value tried.
    """

    def __init__(self, message: str, **state):
        super().__init__(message)
        self.state = state


class ManifestError(MinGenusError, ValueError):
    """A manifest failed to parse or does not match the schema.

    ``line`` is set for syntax errors, ``path`` (e.g. ``classes.S1[2]``)
    for schema errors.
    """

    def __init__(self, message: str, line=None, path=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(path)
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.path = path

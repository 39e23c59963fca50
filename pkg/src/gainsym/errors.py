"""Exception hierarchy shared by every gainsym module."""


class GainGraphError(Exception):
    """Base class for all gainsym errors."""


class InputError(GainGraphError, ValueError):
    """Malformed or invalid input (CLI exit code 2)."""


class NonUnitGain(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class SelfLoop(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotAPermutation(InputError):
    pass


class NotACycle(InputError):
    pass


class NotHermitian(InputError):
    pass


class NonUnitEntry(InputError):
    pass


class NotTwoConnected(InputError):
    pass


class Bipartite(InputError):
    pass


class ParseError(InputError):
    pass


class ResourceError(GainGraphError):
    """A configured size or enumeration cap was hit (CLI exit code 4)."""


class TooLarge(ResourceError):
    pass


class BudgetExceeded(ResourceError):
    pass


class InternalConsistencyError(GainGraphError, RuntimeError):
    """Two independent computations disagreed (CLI exit code 3)."""


class ConvergenceFailure(InternalConsistencyError):
    pass

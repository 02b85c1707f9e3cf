"""Exception hierarchy.

Input problems (bad documents, bad values) derive from `InputError`;
failures of a solver on a valid instance derive from `SolverError`.
"""


class SigmixError(Exception):
    pass


class InputError(SigmixError, ValueError):
    pass


class ScenarioError(InputError):
    """Malformed or invalid scenario document."""

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class ResolutionError(InputError):
    """A quantity is not an integer multiple of its declared resolution."""

    def __init__(self, field, value, resolution):
        self.field = field
        self.value = value
        self.resolution = resolution
        super().__init__(
            f"{field}={value!r} is not a multiple of resolution {resolution!r}")


class DimensionError(InputError):
    pass


class UnknownSolverError(InputError):
    pass


class SolverError(SigmixError):
    pass


class SearchBudgetExhausted(SolverError):
    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"branch-and-bound exceeded {limit} nodes")


class SearchSpaceTooLarge(SolverError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(
            f"enumeration would visit {size} mixes, limit is {limit}")

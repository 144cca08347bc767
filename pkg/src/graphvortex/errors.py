"""Exception types shared across modules, each carrying a machine-readable code."""


class ValidationError(ValueError):
    """Bad input data: graph structure, vortex list, coupling, or instance files."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class SolverFault(RuntimeError):
    """Internal numerical fault (breached barrier, inconsistent oracle, bad factorization)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

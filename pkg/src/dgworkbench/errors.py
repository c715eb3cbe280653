"""Exception hierarchy shared across the workbench.

Three families matter to callers: input problems (bad files, bad
presentations), scope refusals (the instance is outside what the exact
machinery can decide), and internal verification failures.  The CLI maps
them to distinct exit codes.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class InputError(WorkbenchError):
    """Malformed or inconsistent user input (files, presentations, matrices)."""


class ParseError(InputError):
    """Syntax error with a precise location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(InputError):
    """A structural invariant failed (d^2 != 0, non-homogeneous image, ...)."""


class ChainMapError(InputError):
    """A claimed chain map does not commute with the differentials."""

    def __init__(self, degree: int, basis_index: int, detail: str = ""):
        msg = f"chain map fails at degree {degree}, basis element #{basis_index}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.degree = degree
        self.basis_index = basis_index


class MissingDifferentialError(WorkbenchError):
    """A differential needed for a strict cohomology answer is not stored."""


class ScopeError(WorkbenchError):
    """The request is well formed but outside the decidable scope."""


class NonlinearityError(ScopeError):
    """A homotopy-class computation hit a genuinely nonlinear constraint."""

    def __init__(self, context: str, constraint: str):
        super().__init__(f"nonlinear constraint in {context}: {constraint}")
        self.context = context
        self.constraint = constraint


class NonStabilizationError(ScopeError):
    """Weight truncation did not stabilize within the configured bound."""

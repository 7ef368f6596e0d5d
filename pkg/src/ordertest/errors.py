"""Exception types shared across the package."""


class OrdertestError(Exception):
    """Base class for all package-specific errors."""


class CycleError(OrdertestError):
    """Transitive closure of the input pairs would force x < x."""

    def __init__(self, element: int):
        super().__init__(f"relation closure forces element {element} below itself")
        self.element = element


class TransitivityError(OrdertestError):
    """Edge removal broke transitivity; carries one violating triple."""

    def __init__(self, triple: tuple[int, int, int]):
        x, y, z = triple
        super().__init__(
            f"removing edges breaks transitivity: {x} < {y} < {z} but ({x},{z}) is gone"
        )
        self.triple = triple


class ParameterError(OrdertestError):
    """A constructor or algorithm parameter is out of its allowed range."""


class OracleLimitError(OrdertestError):
    """A brute-force oracle was invoked above its configured size cap."""


class BudgetError(OrdertestError):
    """Backtracking exceeded its node-expansion budget."""


class EmptyPosetError(OrdertestError):
    """Density is undefined against an empty host poset."""


class IterationOverflow(OrdertestError):
    """The iterated test's repetition formula exceeds the configured ceiling."""

    def __init__(self, required: int, ceiling: int):
        super().__init__(
            f"iterated test needs {required} repetitions, ceiling is {ceiling}"
        )
        self.required = required
        self.ceiling = ceiling


class PromiseError(OrdertestError):
    """A comparability-graph operation needed the underlying poset but none was given."""


class ConfigError(OrdertestError):
    """Experiment configuration failed to parse or validate."""

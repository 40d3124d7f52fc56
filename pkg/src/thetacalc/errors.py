"""Exception hierarchy shared by all modules.

Three families matter for callers (and map to CLI exit codes): bad input
(``DomainError``, exit 2), refusal to start an oversized computation
(``TermBudgetError``, exit 3), and violations of exactness guarantees that
can only mean an arithmetic bug (``ArithmeticBugError``, exit 1).
"""

from __future__ import annotations


class ThetaCalcError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ThetaCalcError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DivisibilityError(DomainError):
    def __init__(self, divisor: int, dividend: int):
        self.divisor = divisor
        self.dividend = dividend
        super().__init__(f"divisibility: {divisor} does not divide {dividend}")


class LatticeMismatchError(DomainError):
    def __init__(self, message: str = "classes live in different lattices"):
        super().__init__(message)


class DegenerateConfigError(DomainError):
    """Point configuration with coincident points."""


class NuTooWeakError(DomainError):
    def __init__(self, nu: int):
        self.nu = nu
        super().__init__(
            f"nu too weak: nu = {nu} >= -1 does not exclude higher cohomology"
        )


class TermBudgetError(ThetaCalcError):
    def __init__(self, n: int, k: int, terms: int, budget: int):
        self.terms = terms
        self.budget = budget
        super().__init__(f"term budget exceeded: C({n},{k}) = {terms} > {budget}")


class ArithmeticBugError(ThetaCalcError):
    """An exactness guarantee failed; indicates a bug, not bad input."""


class NotRationalError(ArithmeticBugError):
    def __init__(self, order: int, index: int):
        self.order = order
        self.index = index
        super().__init__(
            f"not rational: non-zero coefficient at index {index} (order {order})"
        )


class NotIntegralError(ArithmeticBugError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"not integral: {value}")

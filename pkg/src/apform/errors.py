"""Exception types shared across the package."""


class ApformError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceeded(ApformError):
    """A scan, sieve or enumeration would exceed its configured budget."""


class FactorizationIncomplete(ApformError):
    """Trial division and the rho stage both gave up on a cofactor.

    Attributes:
        n: the original integer being factored.
        cofactor: the composite part that remains unfactored.
        partial: list of (prime, exponent) pairs found so far.
    """

    def __init__(self, n: int, cofactor: int, partial: list[tuple[int, int]]):
        self.n = n
        self.cofactor = cofactor
        self.partial = partial
        super().__init__(
            f"could not fully factor {n}: unfactored cofactor {cofactor}"
        )


class ReducibleFormError(ApformError, ValueError):
    """The quadratic form factors over the rationals (square or zero discriminant)."""


class RankDeficientError(ApformError, ValueError):
    """A generator set does not span a full-rank lattice."""

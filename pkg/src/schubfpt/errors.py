"""Exception types shared across the package."""


class SchubertError(Exception):
    pass


class InvalidTupleError(SchubertError, ValueError):
    """Entries are not strictly increasing inside [1, n], or d > n."""


class DegenerateTopTupleError(SchubertError, ValueError):
    """The kappa formulas are undefined for gamma = [n-d+1, ..., n]."""


class BottomTupleError(SchubertError, ValueError):
    """Raised where [1, ..., d] has no successor (m-value, decrement step)."""


class DegenerateLatticeError(SchubertError, ValueError):
    """A one-element lattice has no join-irreducibles."""


class BudgetExceededError(SchubertError, RuntimeError):
    def __init__(self, what, limit):
        super().__init__(f"{what} exceeds the configured budget of {limit}")
        self.what = what
        self.limit = limit

"""Exception hierarchy.

Every error carries a machine-readable payload so the CLI can emit a
structured error object instead of a traceback.
"""


class MomentLabError(Exception):
    """Base class for all mathematical errors raised by momentlab."""

    def payload(self):
        return {"error": type(self).__name__, "message": str(self)}


class NonInvertibleConstantTerm(MomentLabError, ZeroDivisionError):
    pass


class CompositionConstantTerm(MomentLabError, ValueError):
    pass


class NotReversible(MomentLabError, ValueError):
    pass


class BadConstantTerm(MomentLabError, ValueError):
    pass


class NotExactlyDivisible(MomentLabError, ArithmeticError):
    pass


class SchemeMismatch(MomentLabError, ValueError):
    pass


class IndexBeyondPrefix(MomentLabError, IndexError):
    """A parameter index past the end of a finite prefix was requested."""

    def __init__(self, name, index, available):
        self.name = name
        self.index = index
        self.available = available
        super().__init__(
            f"{name}_{index} requested but only {available} entries are known"
        )

    def payload(self):
        d = super().payload()
        d.update(name=self.name, index=self.index)
        return d


class SingularHankel(MomentLabError, ZeroDivisionError):
    """Hankel determinant Delta_k vanishes."""

    def __init__(self, k):
        self.k = k
        super().__init__(f"Hankel determinant Delta_{k} is zero")

    def payload(self):
        d = super().payload()
        d["k"] = self.k
        return d


class InsufficientDepth(MomentLabError, ValueError):
    pass


class InsufficientMoments(MomentLabError, ValueError):
    pass


class BadOrder(MomentLabError, ValueError):
    pass


class ExplosionGuard(MomentLabError, RuntimeError):
    """Configuration search exceeded its budget."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"more than {limit} partial configurations explored")

    def payload(self):
        d = super().payload()
        d["limit"] = self.limit
        return d

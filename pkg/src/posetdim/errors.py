"""Domain error types shared across the toolkit."""


class PosetDimError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__

    def payload(self) -> dict:
        """Extra machine-readable fields for CLI error reports."""
        return {}


class CycleError(PosetDimError):
    """The input relation is cyclic, so no strict partial order exists."""


class GenerationExhausted(PosetDimError):
    """Rejection sampling hit its retry limit."""


class NotAnExtension(PosetDimError):
    """A claimed linear extension is not one; .pair holds an offending relation."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair

    def payload(self):
        return {"pair": list(self.pair)} if self.pair is not None else {}


class ComparablePairError(PosetDimError):
    """A pair that must be incomparable is comparable."""


class TooLarge(PosetDimError):
    """Instance exceeds the hard size limit of an exhaustive routine."""


class BudgetExceeded(PosetDimError):
    """Search budget ran out before optimality was settled.

    .best carries the best known result (a valid upper bound, flagged
    non-optimal) so callers may continue with it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NoValidColor(PosetDimError):
    """Some subset has a mate at every position; .embedding witnesses the S_k."""

    def __init__(self, message, embedding=None):
        super().__init__(message)
        self.embedding = embedding

    def payload(self):
        if self.embedding is None:
            return {}
        return {
            "a_elems": list(self.embedding.a_elems),
            "b_elems": list(self.embedding.b_elems),
        }


class AcquisitionFailed(PosetDimError):
    """Could not sample a matrix with the isolating-row property."""

    def __init__(self, message, analytic_bound=None):
        super().__init__(message)
        self.analytic_bound = analytic_bound

    def payload(self):
        if self.analytic_bound is None:
            return {}
        return {"analytic_bound": self.analytic_bound}


class VerificationFailed(PosetDimError):
    """A constructed family missed a pair it must reverse; .pair has it."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair

    def payload(self):
        return {"pair": list(self.pair)} if self.pair is not None else {}


class NoMonochromaticSet(PosetDimError):
    """Direct search found no monochromatic subset of the requested size."""


class BoundExceeded(PosetDimError):
    """A peel step produced more extensions than its guarantee allows."""


class ContainsSk(PosetDimError):
    """The poset contains a standard example; .embedding is the witness."""

    def __init__(self, message, embedding=None):
        super().__init__(message)
        self.embedding = embedding

    def payload(self):
        if self.embedding is None:
            return {}
        return {
            "a_elems": list(self.embedding.a_elems),
            "b_elems": list(self.embedding.b_elems),
        }

"""Exception hierarchy shared by all subpackages."""


class TernarityError(Exception):
    pass


class InputError(TernarityError, ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(InputError):
    pass


class SimplicityError(InputError):
    """An operation would create a duplicate hyperedge."""


class SizeMismatch(InputError):
    pass


class SemiringMismatch(InputError):
    pass


class FrameError(InputError):
    """Relation frames disagree on a shared set."""


class ComposabilityError(InputError):
    """Trisomorphisms violate isomorphism uniqueness."""


class BudgetExceeded(TernarityError):
    """A resource budget ran out; ``partial`` carries whatever was finished."""

    def __init__(self, message, partial=None, progress=None):
        super().__init__(message)
        self.partial = partial
        self.progress = progress or {}

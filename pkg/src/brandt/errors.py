"""Exception hierarchy shared by all modules."""


class SemigroupError(Exception):
    """Base class for invalid algebraic input."""


class DuplicateLabel(SemigroupError):
    pass


class BadIndex(SemigroupError):
    pass


class NonAssociative(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"associativity fails at triple ({i}, {j}, {k})")
        self.witness = (i, j, k)


class NotIdempotent(SemigroupError):
    pass


class NoIdentity(SemigroupError):
    pass


class NotAutomorphism(SemigroupError):
    pass


class BadCardinality(SemigroupError):
    pass


class NotMonoidWithZero(SemigroupError):
    pass


class NotAGroup(SemigroupError):
    pass


class OutOfRange(SemigroupError):
    pass


class InvalidTriple(SemigroupError):
    pass


class MismatchedBase(SemigroupError):
    pass


class NotAnAutomorphism(SemigroupError):
    pass


class BudgetExceeded(Exception):
    """A search or construction would exceed the configured size budget."""


class LambdaCapExceeded(BudgetExceeded):
    """Requested index-set size is above the construction cap."""


class DecompositionMismatch(Exception):
    """An automorphism of an extension over a monoid with zero could not be
    reproduced from its extracted triple.  This must never fire on valid
    inputs; it signals a genuine structural violation, not a recoverable
    condition."""

"""Exception types shared across the package.

Everything derives from SemigroupError so the CLI can map domain errors
to a single exit code; plain ValueError/TypeError keep signalling misuse
of the API itself.
"""


class SemigroupError(Exception):
    """Base class for domain errors."""


class NotRepresentable(SemigroupError):
    """The requested set has no gaps (it is all of N) and cannot be stored."""


class NotClosed(SemigroupError):
    """A representable sum of members is missing from the candidate set."""


class FrobeniusViolated(SemigroupError):
    """The designated Frobenius number appears among the members."""


class GcdNotOne(SemigroupError):
    """Generators with gcd above 1 leave an infinite complement."""


class NotAMember(SemigroupError):
    """An argument required to be a nonzero member is not one."""


class WouldChangeFrobenius(SemigroupError):
    """Removing this element would alter the Frobenius number."""


class ResidueClassMissing(SemigroupError):
    """No generator hits some residue class; the caller broke a precondition."""


class PreconditionViolated(SemigroupError):
    """An extension candidate fails the cheap eligibility checks."""


class NotASatFSet(SemigroupError):
    """The set extends to no saturated semigroup with the given Frobenius number."""


class NotSaturated(SemigroupError):
    """The operation is defined for saturated semigroups only."""


class WrongFrobenius(SemigroupError):
    """The semigroup's Frobenius number differs from the expected one."""


class NotASatSequence(SemigroupError):
    """The tuple is not a strictly decreasing divisor chain avoiding F."""


class TooLarge(SemigroupError):
    """The brute-force search space would be impractically big."""

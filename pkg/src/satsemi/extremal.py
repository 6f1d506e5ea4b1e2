"""Extremal members of the saturated family with fixed Frobenius number.

The inclusion-maximal members follow a single arithmetic progression up
to the conductor: multiples of a step a below F+1, plus every integer
from F+1 on.  Which steps occur is a divisibility question about F
alone, and the least achievable genus comes from the smallest usable
step.
"""

from __future__ import annotations

from .errors import NotRepresentable
from .semigroup import NumericalSemigroup, ordinary

__all__ = [
    "tooth",
    "non_divisors",
    "minimal_non_divisors",
    "maximal_elements",
    "least_non_divisor",
    "min_genus",
]


def tooth(step: int, conductor: int) -> NumericalSemigroup:
    """Multiples of ``step`` together with every integer >= ``conductor``.

    Saturated for any positive arguments.  When the result would be all
    of N (step 1, or conductor below 2) NotRepresentable is raised.
    """
    if step < 1 or conductor < 1:
        raise ValueError("step and conductor must be positive")
    frobenius = 0
    for x in range(conductor - 1, 0, -1):
        if x % step:
            frobenius = x
            break
    if not frobenius:
        raise NotRepresentable("every nonnegative integer is in the set")
    mask = 0
    for i in range(frobenius + 2):
        if i % step == 0 or i >= conductor:
            mask |= 1 << i
    return NumericalSemigroup(frobenius, mask)


def non_divisors(n: int) -> tuple[int, ...]:
    """Integers in 1..n that do not divide n, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(x for x in range(1, n + 1) if n % x)


def minimal_non_divisors(n: int) -> tuple[int, ...]:
    """Non-divisors of n divisible by no smaller non-divisor, ascending."""
    nd = non_divisors(n)
    return tuple(x for x in nd if all(x % y for y in nd if y < x))


def maximal_elements(frobenius: int) -> list[NumericalSemigroup]:
    """The inclusion-maximal saturated semigroups with this Frobenius number.

    Each is a single-progression semigroup whose step is a minimal
    non-divisor of F, listed by ascending step.  For F in {1, 2} every
    smaller integer divides F, the family is the single ordinary
    semigroup, and that is returned as its own maximum.
    """
    steps = minimal_non_divisors(frobenius)
    if not steps:
        return [ordinary(frobenius + 1)]
    return [tooth(x, frobenius + 1) for x in steps]


def least_non_divisor(n: int) -> int:
    """Smallest positive integer that does not divide n."""
    if n < 1:
        raise ValueError("n must be positive")
    p = 2
    while n % p == 0:
        p += 1
    return p


def min_genus(frobenius: int) -> int:
    """Least genus among the saturated semigroups with this Frobenius number.

    Equals F - floor(F/p) for the least non-divisor p of F, the genus of
    the progression semigroup with step p.
    """
    return frobenius - frobenius // least_non_divisor(frobenius)

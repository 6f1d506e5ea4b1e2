"""Finite sets inside the saturated family, and least saturated extensions.

Call X a usable set for F when X lies in {1..F-1} and some saturated
semigroup with Frobenius number F contains it.  That happens exactly when
X is empty or gcd(X) does not divide F: a witness can be written down
directly, while a gcd dividing F would force F itself into any saturated
superset (repeatedly adding the gcd of the prefix ends on F).

The least witness follows X explicitly.  Between consecutive elements of
X the members form an arithmetic progression whose step is the gcd of the
elements so far; the final progression runs up to F, and everything from
F+1 on is included.  Conversely, scanning any saturated member for the
positions where the running gcd of its members drops recovers the unique
minimal set that generates it this way; the size of that set is the rank
of the member.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .errors import NotASatFSet, NotSaturated, WrongFrobenius
from .semigroup import NumericalSemigroup, ordinary

__all__ = [
    "SatFSet",
    "is_sat_set",
    "closure",
    "minimal_system",
    "is_minimal_system",
    "rank",
]


class SatFSet(NamedTuple):
    """An ascending set of members below a fixed Frobenius number."""

    frobenius: int
    elements: tuple[int, ...]


def _normalized(xs: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(xs)))


def is_sat_set(frobenius: int, xs: Iterable[int]) -> bool:
    """Can xs sit inside a saturated semigroup with this Frobenius number?

    True when xs lies within {1..F-1} and either is empty or has a gcd
    that does not divide F.
    """
    if frobenius < 1:
        return False
    ns = _normalized(xs)
    if not ns:
        return True
    if ns[0] < 1 or ns[-1] >= frobenius:
        return False
    return frobenius % math.gcd(*ns) != 0


def closure(frobenius: int, xs: Iterable[int]) -> NumericalSemigroup:
    """The least saturated semigroup with this Frobenius number containing xs.

    Input order and repeats are irrelevant.  Raises NotASatFSet when no
    such semigroup exists; the empty set closes to the ordinary semigroup
    {0, F+1, ->}.
    """
    ns = _normalized(xs)
    if not is_sat_set(frobenius, ns):
        raise NotASatFSet(
            f"{list(ns)} extends to no saturated semigroup with Frobenius number {frobenius}"
        )
    if not ns:
        return ordinary(frobenius + 1)
    small: list[int] = []
    g = 0
    for i, n in enumerate(ns):
        g = math.gcd(g, n)
        stop = ns[i + 1] if i + 1 < len(ns) else frobenius
        small.extend(range(n, stop, g))
    return NumericalSemigroup.from_small_elements(frobenius, small)


def minimal_system(
    S: NumericalSemigroup, frobenius: int | None = None
) -> SatFSet:
    """The unique minimal set whose closure is S.

    Its elements are the members below F where the running gcd of the
    members drops; the multiplicity always belongs unless S is ordinary,
    whose system is empty.  S must be saturated (NotSaturated) and, when
    a Frobenius number is supplied, match it (WrongFrobenius).
    """
    if frobenius is not None and frobenius != S.frobenius:
        raise WrongFrobenius(
            f"expected Frobenius number {frobenius}, got {S.frobenius}"
        )
    if not S.is_saturated():
        raise NotSaturated(f"{S!r} is not saturated")
    picks: list[int] = []
    g = 0
    for s in range(1, S.frobenius):
        if s in S:
            g2 = math.gcd(g, s)
            if g2 != g:
                picks.append(s)
                g = g2
    return SatFSet(S.frobenius, tuple(picks))


def is_minimal_system(frobenius: int, xs: Iterable[int]) -> bool:
    """Is xs (normalized) exactly the minimal system of its closure?

    Happens precisely when every element strictly drops the running gcd
    of the prefix.  Raises NotASatFSet on unusable input.
    """
    ns = _normalized(xs)
    if not is_sat_set(frobenius, ns):
        raise NotASatFSet(
            f"{list(ns)} extends to no saturated semigroup with Frobenius number {frobenius}"
        )
    g = 0
    for n in ns:
        g2 = math.gcd(g, n)
        if g2 == g:
            return False
        g = g2
    return True


def rank(S: NumericalSemigroup, frobenius: int | None = None) -> int:
    """Size of the minimal system; 0 exactly for the ordinary semigroup."""
    return len(minimal_system(S, frobenius).elements)

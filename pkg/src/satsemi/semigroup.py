"""Bounded numerical semigroups and their basic invariants.

A numerical semigroup is a subset of the nonnegative integers that is
closed under addition, contains 0, and misses only finitely many values.
Writing F for the largest missing value (the Frobenius number), the whole
set is determined by membership on 0..F+1, because every integer above
F+1 belongs automatically.  Instances store that window as a bitmap
packed into one int: membership is a shift and a mask, and set-level
operations run on machine words.

The set of all nonnegative integers has no largest gap and is therefore
not representable; constructors reject it.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    FrobeniusViolated,
    GcdNotOne,
    NotAMember,
    NotClosed,
    NotRepresentable,
    WouldChangeFrobenius,
)

__all__ = ["AperyTable", "NumericalSemigroup", "ordinary"]


class AperyTable(NamedTuple):
    """Least member of each residue class modulo a fixed nonzero member.

    ``entries[i]`` is the smallest member congruent to i mod ``modulus``;
    subtracting the modulus from any entry leaves the semigroup.
    """

    modulus: int
    entries: tuple[int, ...]


class NumericalSemigroup:
    """A numerical semigroup, bounded by its Frobenius number.

    ``frobenius`` is the largest gap; ``x in S`` answers membership for
    any integer.  Instances are immutable and hashable.  Use
    :meth:`from_small_elements`, :meth:`from_generators` or
    :func:`ordinary` to build one.
    """

    __slots__ = ("frobenius", "_mask")

    def __init__(self, frobenius: int, mask: int):
        """Validate and store a membership bitmap over 0..frobenius+1.

        Raises FrobeniusViolated when bit ``frobenius`` is set and
        NotClosed when some representable sum of members is missing.
        """
        if frobenius < 1:
            raise NotRepresentable("a numerical semigroup here needs a gap, so frobenius >= 1")
        window = (1 << (frobenius + 2)) - 1
        if mask & ~window:
            raise ValueError("membership bitmap has bits above frobenius+1")
        if not mask & 1:
            raise ValueError("0 must be a member")
        if not (mask >> (frobenius + 1)) & 1:
            raise ValueError("frobenius+1 must be a member")
        if (mask >> frobenius) & 1:
            raise FrobeniusViolated(f"{frobenius} cannot be a member")
        limit = frobenius + 1
        body = mask & ~1
        for a in range(1, limit // 2 + 1):
            if (mask >> a) & 1:
                missing = (body << a) & window & ~mask
                if missing:
                    s = (missing & -missing).bit_length() - 1
                    raise NotClosed(f"{a} + {s - a} = {s} is missing")
        self.frobenius = frobenius
        self._mask = mask

    @classmethod
    def _raw(cls, frobenius: int, mask: int) -> "NumericalSemigroup":
        # trusted path for values already known valid
        self = object.__new__(cls)
        self.frobenius = frobenius
        self._mask = mask
        return self

    @classmethod
    def from_small_elements(cls, frobenius: int, small: Iterable[int]) -> "NumericalSemigroup":
        """Build {0} union ``small`` union {frobenius+1, ->}.

        Every listed element must satisfy 0 < s < frobenius; listing the
        Frobenius number itself raises FrobeniusViolated, and a candidate
        set that is not additively closed raises NotClosed.
        """
        if frobenius < 1:
            raise NotRepresentable("frobenius must be >= 1")
        mask = 1 | (1 << (frobenius + 1))
        for s in small:
            if s == frobenius:
                raise FrobeniusViolated(f"{s} is the designated Frobenius number")
            if not 0 < s < frobenius:
                raise ValueError(f"small element {s} outside 1..{frobenius - 1}")
            mask |= 1 << s
        return cls(frobenius, mask)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Build the semigroup of all sums of the generators.

        The generators must be positive with overall gcd 1 (GcdNotOne
        otherwise); a generator 1 yields all of N, which is rejected as
        NotRepresentable.  The true Frobenius number is computed.
        """
        gs = sorted(set(gens))
        if not gs or gs[0] < 1:
            raise ValueError("generators must be positive integers")
        if math.gcd(*gs) != 1:
            raise GcdNotOne(f"gcd{tuple(gs)} != 1")
        if gs[0] == 1:
            raise NotRepresentable("1 generates all of N")
        m = gs[0]
        bound = m * gs[-1]
        while True:
            reach = 1
            for i in range(m, bound + 1):
                for g in gs:
                    if g > i:
                        break
                    if (reach >> (i - g)) & 1:
                        reach |= 1 << i
                        break
            run = reach
            for k in range(1, m):
                run &= reach >> k
            run &= ~1
            if run:
                # everything from the start of an m-long run on is a member
                conductor = (run & -run).bit_length() - 1
                frobenius = max(i for i in range(1, conductor) if not (reach >> i) & 1)
                return cls(frobenius, reach & ((1 << (frobenius + 2)) - 1))
            bound *= 2

    # -- membership and counting ------------------------------------------

    def __contains__(self, x: int) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        if x > self.frobenius + 1:
            return True
        return (self._mask >> x) & 1 == 1

    def members_up_to(self, bound: int) -> Iterator[int]:
        """Yield every member s with 0 <= s <= bound, ascending."""
        top = min(bound, self.frobenius + 1)
        for i in range(top + 1):
            if (self._mask >> i) & 1:
                yield i
        for i in range(self.frobenius + 2, bound + 1):
            yield i

    @property
    def multiplicity(self) -> int:
        """Least nonzero member."""
        body = self._mask & ~1
        return (body & -body).bit_length() - 1

    @property
    def small_count(self) -> int:
        """Number of members strictly below the Frobenius number, 0 included."""
        return (self._mask & ((1 << self.frobenius) - 1)).bit_count()

    @property
    def genus(self) -> int:
        """Number of gaps."""
        return self.frobenius + 1 - self.small_count

    @property
    def embedding_dimension(self) -> int:
        """Size of the minimal generating set."""
        return len(self.minimal_generators())

    def nonzero_small_elements(self) -> tuple[int, ...]:
        """Members strictly between 0 and the Frobenius number, ascending."""
        return tuple(i for i in range(1, self.frobenius) if (self._mask >> i) & 1)

    def gaps(self) -> tuple[int, ...]:
        """The finitely many nonmembers, ascending."""
        return tuple(
            i for i in range(1, self.frobenius + 1) if not (self._mask >> i) & 1
        )

    # -- generators and Apery structure -----------------------------------

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal generating set, ascending.

        A nonzero member is a minimal generator exactly when it is not a
        sum of two nonzero members.  No generator exceeds 2F+1: from 2F+2
        on, every value splits as (F+1) plus another member.
        """
        F = self.frobenius
        limit = 2 * F + 1
        ext = self._mask | ((1 << F) - 1) << (F + 2)
        window = (1 << (limit + 1)) - 1
        body = ext & ~1
        sums = 0
        for a in range(1, F + 1):
            if (self._mask >> a) & 1:
                sums |= body << a
        gens = body & ~(sums & window)
        return tuple(i for i in range(1, limit + 1) if (gens >> i) & 1)

    def apery(self, n: int) -> AperyTable:
        """Least member of each residue class mod n, for a nonzero member n."""
        if n <= 0 or n not in self:
            raise NotAMember(f"{n} is not a nonzero member")
        entries: list[int] = [-1] * n
        remaining = n
        for s in self.members_up_to(self.frobenius + 1):
            r = s % n
            if entries[r] < 0:
                entries[r] = s
                remaining -= 1
                if not remaining:
                    break
        if remaining:
            base = self.frobenius + 2
            for r in range(n):
                if entries[r] < 0:
                    entries[r] = base + (r - base) % n
        return AperyTable(n, tuple(entries))

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps z with z + s a member for every nonzero member s, ascending.

        Computed from the Apery table of the multiplicity: subtract the
        multiplicity from the entries maximal under the partial order
        "difference is a member".
        """
        n = self.multiplicity
        ap = self.apery(n).entries
        ap_set = frozenset(ap)
        nonzero = [w for w in ap if w]
        out = [
            w - n
            for w in nonzero
            if all(w + w2 not in ap_set for w2 in nonzero)
        ]
        out.sort()
        return tuple(out)

    def special_gaps(self) -> tuple[int, ...]:
        """Gaps whose adjunction leaves a numerical semigroup, ascending.

        These are the pseudo-Frobenius numbers whose double is a member.
        """
        pf = self.pseudo_frobenius()
        pf_set = frozenset(pf)
        return tuple(x for x in pf if 2 * x not in pf_set)

    def gcd_up_to(self, s: int) -> int:
        """gcd of all members <= s; s itself must be a nonzero member."""
        if s <= 0 or s not in self:
            raise NotAMember(f"{s} is not a nonzero member")
        if s >= self.frobenius + 2:
            return 1  # the prefix contains the consecutive pair F+1, F+2
        g = 0
        for j in self.members_up_to(s):
            if j:
                g = math.gcd(g, j)
                if g == 1:
                    break
        return g

    # -- predicates --------------------------------------------------------

    def is_saturated(self) -> bool:
        """True when s + gcd_up_to(s) is a member for every nonzero member s.

        Members above the Frobenius number need no check: their prefix gcd
        is 1 and the successor is always present.
        """
        g = 0
        for s in range(1, self.frobenius + 1):
            if (self._mask >> s) & 1:
                g = math.gcd(g, s)
                if s + g not in self:
                    return False
        return True

    def is_med(self) -> bool:
        """True when the embedding dimension equals the multiplicity."""
        return len(self.minimal_generators()) == self.multiplicity

    def issubset(self, other: "NumericalSemigroup") -> bool:
        bound = max(self.frobenius, other.frobenius)
        return self._filled(bound) & ~other._filled(bound) == 0

    # -- derived semigroups -------------------------------------------------

    def _filled(self, frobenius: int) -> int:
        # bitmap over 0..frobenius+1 with the implicit tail made explicit
        width = frobenius + 2
        own = self.frobenius + 2
        if width <= own:
            return self._mask
        return self._mask | (((1 << (width - own)) - 1) << own)

    def intersect(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        """Set intersection; its Frobenius number is the larger of the two."""
        frobenius = max(self.frobenius, other.frobenius)
        return NumericalSemigroup._raw(
            frobenius, self._filled(frobenius) & other._filled(frobenius)
        )

    def remove_multiplicity(self) -> "NumericalSemigroup":
        """Drop the least nonzero member.

        The ordinary semigroup {0, F+1, ->} has only F+1 to drop, which
        would change the Frobenius number; that raises WouldChangeFrobenius.
        """
        m = self.multiplicity
        if m == self.frobenius + 1:
            raise WouldChangeFrobenius(
                "removing the multiplicity of {0, F+1, ->} changes the Frobenius number"
            )
        return NumericalSemigroup._raw(self.frobenius, self._mask & ~(1 << m))

    def adjoin(self, x: int) -> "NumericalSemigroup":
        """Return the semigroup with the gap x added.

        x must be a gap below the Frobenius number whose adjunction keeps
        the set closed (a special gap); otherwise NotClosed is raised.
        """
        if not 0 < x < self.frobenius or x in self:
            raise ValueError(f"{x} is not a gap below the Frobenius number")
        return NumericalSemigroup(self.frobenius, self._mask | (1 << x))

    # -- canonical external forms -------------------------------------------

    def canonical_text(self) -> str:
        """Generator form, e.g. "<2,9> | F=7" with angle brackets."""
        gens = ",".join(map(str, self.minimal_generators()))
        return f"⟨{gens}⟩ | F={self.frobenius}"

    def canonical_json(self) -> dict:
        """The shared JSON object: frobenius, small_elements, msg, genus, multiplicity."""
        return {
            "frobenius": self.frobenius,
            "small_elements": list(self.nonzero_small_elements()),
            "msg": list(self.minimal_generators()),
            "genus": self.genus,
            "multiplicity": self.multiplicity,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self.frobenius, self._mask))

    def __repr__(self) -> str:
        small = ",".join(map(str, self.nonzero_small_elements()))
        return f"NumericalSemigroup(F={self.frobenius}, small=[{small}])"


def ordinary(conductor: int) -> NumericalSemigroup:
    """The semigroup {0, conductor, conductor+1, ...}.

    It is saturated, and it is the least saturated semigroup with
    Frobenius number conductor-1.
    """
    if conductor < 0:
        raise ValueError("conductor must be nonnegative")
    if conductor < 2:
        raise NotRepresentable(f"{{0, {conductor}, ->}} is all of N")
    return NumericalSemigroup._raw(conductor - 1, 1 | (1 << conductor))

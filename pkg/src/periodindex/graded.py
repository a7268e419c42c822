"""Finitely generated graded abelian groups in canonical form.

A cyclic summand is encoded by its order: 0 stands for an infinite cyclic
group Z, any integer >= 2 for Z/n.  Order-1 summands are trivial and get
dropped during normalisation.  A graded group stores, per degree, the free
rank together with the sorted multiset of finite orders; composite orders
such as Z/6 are kept as-is (primary decomposition happens lazily through
``primary_part``), because the homology formulas feeding this module
produce composite orders directly.

Every group carries a truncation cap ``max_degree``: content is only known
up to that degree, and reading past it is an error rather than a silent
zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import gcd, lcm, prod

from .bounds import factorize


def tensor_summands(a: int, b: int) -> int | None:
    """Tensor product of cyclic groups: Z ox Z = Z, Z/a ox Z/b = Z/gcd(a,b).

    Returns the order of the result, or None when the product is trivial.
    The single gcd formula covers the free cases because gcd(0, n) == n.
    """
    g = gcd(a, b)
    return None if g == 1 else g


def tor_summands(a: int, b: int) -> int | None:
    """Tor of cyclic groups: vanishes against Z, else Z/gcd(a,b)."""
    if a == 0 or b == 0:
        return None
    g = gcd(a, b)
    return None if g == 1 else g


@dataclass(frozen=True)
class GradedAbelianGroup:
    """Graded abelian group: parts[n] = (free rank, sorted finite orders).

    The length of ``parts`` is max_degree + 1; trailing empty degrees are
    meaningful (they assert the group is known to be trivial there).

    >>> g = GradedAbelianGroup.from_summands({0: [0], 2: [4, 2]}, max_degree=3)
    >>> g.summands(2)
    (0, (2, 4))
    >>> g.describe(2)
    'Z/2 + Z/4'
    """

    parts: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a graded group needs at least degree 0")
        fixed = []
        for free, torsion in self.parts:
            if free < 0:
                raise ValueError("negative free rank")
            orders = sorted(int(t) for t in torsion)
            if any(t < 2 for t in orders):
                raise ValueError("torsion orders must be >= 2 in canonical form")
            fixed.append((int(free), tuple(orders)))
        object.__setattr__(self, "parts", tuple(fixed))

    @classmethod
    def from_summands(cls, summands, max_degree: int) -> "GradedAbelianGroup":
        """Build from {degree: iterable of cyclic orders} (0 encodes Z).

        Order-1 entries are dropped; content above ``max_degree`` is an
        error because the result would silently misstate the truncation.
        """
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        parts = [[0, []] for _ in range(max_degree + 1)]
        for degree, orders in summands.items():
            orders = list(orders)
            if not orders:
                continue
            if not 0 <= degree <= max_degree:
                raise ValueError(
                    f"summands in degree {degree} fall outside the truncation cap {max_degree}")
            for order in orders:
                if order < 0:
                    raise ValueError("cyclic order must be >= 0")
                if order == 0:
                    parts[degree][0] += 1
                elif order > 1:
                    parts[degree][1].append(order)
        return cls(tuple((f, tuple(t)) for f, t in parts))

    @classmethod
    def unit(cls, max_degree: int) -> "GradedAbelianGroup":
        """Z concentrated in degree 0 (the unit for the Kunneth product)."""
        return cls.from_summands({0: [0]}, max_degree)

    @property
    def max_degree(self) -> int:
        return len(self.parts) - 1

    def summands(self, degree: int) -> tuple[int, tuple[int, ...]]:
        """(free rank, sorted finite orders) in one degree; errors past the cap."""
        if not 0 <= degree <= self.max_degree:
            raise ValueError(
                f"degree {degree} is outside the trusted range 0..{self.max_degree}")
        return self.parts[degree]

    def nonzero_degrees(self) -> list[int]:
        return [d for d, (free, tors) in enumerate(self.parts) if free or tors]

    def invariant_factors(self, degree: int) -> tuple[int, ...]:
        """Torsion in divisibility-chain form d_1 | d_2 | ..., ascending.

        The stored multiset keeps summands as they were produced, so the
        isomorphic groups Z/2 + Z/3 and Z/6 store differently; this is the
        isomorphism-invariant shape, and the form a Smith-normal-form
        homology computation reports.

        >>> GradedAbelianGroup.from_summands({1: [4, 6]}, 1).invariant_factors(1)
        (2, 12)
        """
        _, torsion = self.summands(degree)
        by_prime: dict[int, list[int]] = {}
        for order in torsion:
            for p, e in factorize(order):
                by_prime.setdefault(p, []).append(e)
        towers = [sorted((p ** e for e in exps), reverse=True)
                  for p, exps in sorted(by_prime.items())]
        chain = [prod(tier) for tier in zip_longest(*towers, fillvalue=1)]
        return tuple(sorted(chain))

    def restrict(self, new_max_degree: int) -> "GradedAbelianGroup":
        """Lower the truncation cap, discarding the degrees above it."""
        if not 0 <= new_max_degree <= self.max_degree:
            raise ValueError("can only restrict within the trusted range")
        return GradedAbelianGroup(self.parts[:new_max_degree + 1])

    def describe(self, degree: int) -> str:
        free, torsion = self.summands(degree)
        pieces = []
        if free == 1:
            pieces.append("Z")
        elif free > 1:
            pieces.append(f"Z^{free}")
        pieces.extend(f"Z/{t}" for t in torsion)
        return " + ".join(pieces) if pieces else "0"

    def to_json(self) -> dict:
        """{str(degree): {"free": rank, "torsion": [decimal strings]}}.

        Every degree up to the cap is present, so the cap round-trips.
        Orders are decimal strings: they can exceed what consumers with
        fixed-width numbers parse losslessly.
        """
        return {
            str(d): {"free": free, "torsion": [str(t) for t in torsion]}
            for d, (free, torsion) in enumerate(self.parts)
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedAbelianGroup":
        degrees = {int(k): v for k, v in data.items()}
        max_degree = max(degrees)
        summands = {
            d: [0] * entry["free"] + [int(t) for t in entry["torsion"]]
            for d, entry in degrees.items()
        }
        return cls.from_summands(summands, max_degree)

    def __str__(self):
        lines = [f"H_{d} = {self.describe(d)}" for d in self.nonzero_degrees()]
        return "\n".join(lines) if lines else "0"


def kunneth(a: GradedAbelianGroup, b: GradedAbelianGroup,
            max_degree: int) -> GradedAbelianGroup:
    """Graded Kunneth product truncated at ``max_degree``.

    Degree n of the result is the sum of A_i ox B_j over i + j = n plus
    Tor(A_i, B_j) over i + j = n - 1.  Both factors must be trusted up to
    the requested cap: a factor of unknown content in low degrees could
    otherwise leak wrong answers below the cap.
    """
    if max_degree > min(a.max_degree, b.max_degree):
        raise ValueError(
            f"kunneth truncated at {max_degree} needs both factors trusted that far "
            f"(caps are {a.max_degree} and {b.max_degree})")
    acc: dict[int, list[int]] = {}
    for i in range(max_degree + 1):
        free_a, tors_a = a.summands(i)
        if not free_a and not tors_a:
            continue
        cyclics_a = [0] * free_a + list(tors_a)
        for j in range(max_degree - i + 1):
            free_b, tors_b = b.summands(j)
            if not free_b and not tors_b:
                continue
            cyclics_b = [0] * free_b + list(tors_b)
            tensor_bucket = acc.setdefault(i + j, [])
            for x in cyclics_a:
                for y in cyclics_b:
                    t = tensor_summands(x, y)
                    if t is not None:
                        tensor_bucket.append(t)
            if i + j + 1 <= max_degree:
                tor_bucket = acc.setdefault(i + j + 1, [])
                for x in cyclics_a:
                    for y in cyclics_b:
                        t = tor_summands(x, y)
                        if t is not None:
                            tor_bucket.append(t)
    return GradedAbelianGroup.from_summands(acc, max_degree)


def exponent(a: GradedAbelianGroup, degree: int) -> tuple[int, int]:
    """(torsion exponent, free rank) in one degree.

    The exponent is the lcm of the finite orders, 1 for a torsion-free
    degree.  Free rank is reported separately since no finite integer
    kills a Z summand.
    """
    free, torsion = a.summands(degree)
    return (lcm(*torsion) if torsion else 1, free)


def primary_part(a: GradedAbelianGroup, p: int) -> GradedAbelianGroup:
    """Keep only the p-power part of every finite summand; drop free parts."""
    if p < 2:
        raise ValueError("p must be a prime")
    summands: dict[int, list[int]] = {}
    for d in range(a.max_degree + 1):
        _, torsion = a.summands(d)
        orders = []
        for m in torsion:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            if q > 1:
                orders.append(q)
        if orders:
            summands[d] = orders
    return GradedAbelianGroup.from_summands(summands, a.max_degree)

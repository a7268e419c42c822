"""Period-index arithmetic for topological Brauer classes.

For a Brauer class of period n on a 2d-dimensional finite CW complex, the
index divides

    n^(d-1) * prod_{p | n} p^(v_p((d-1)!)),

the product of the per-prime differential-order bounds p^(r + v_p(j)) over
j = 1..d-1.  ``index_bound`` evaluates this, reports the per-prime
breakdown, and attaches the best known sharp value in the low dimensions
where one is known (d <= 4).  Reports serialise with the bound under the
key "theorem_a" and the coprime-case flag under "corollary_b".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, prod


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs here are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            r = 0
            while n % p == 0:
                n //= p
                r += 1
            out.append((p, r))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def padic_valuation(p: int, m: int) -> int:
    """Largest e with p^e dividing m (m >= 1)."""
    if m < 1:
        raise ValueError("padic_valuation needs m >= 1")
    if p < 2:
        raise ValueError("p must be a prime")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def legendre_valuation(p: int, m: int) -> int:
    """v_p(m!) as the Legendre sum floor(m/p) + floor(m/p^2) + ..."""
    if m < 0:
        raise ValueError("legendre_valuation needs m >= 0")
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


def differential_order_bound(p: int, r: int, j: int) -> int:
    """p^(r + v_p(j)): the order bound on the j-th odd differential.

    This is the torsion exponent of the p-primary part of the degree-2j
    homology of the universal example for period p^r, so it caps the order
    of the image of d_{2j+1} in the twisted K-theory spectral sequence.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    return p ** (r + padic_valuation(p, j))


def prime_power_index_bound(p: int, r: int, d: int) -> int:
    """Index bound for period p^r in dimension 2d: p^((d-1)r + v_p((d-1)!)).

    Evaluated both as the product of the per-differential bounds and in
    closed form; the two routes must agree.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    via_product = prod(differential_order_bound(p, r, j) for j in range(1, d))
    closed_form = p ** ((d - 1) * r + legendre_valuation(p, d - 1))
    if via_product != closed_form:
        raise AssertionError(
            f"differential product {via_product} != closed form {closed_form} "
            f"for p={p}, r={r}, d={d}")
    return closed_form


@dataclass(frozen=True)
class SharpBound:
    value: int
    source: str

    def to_json_dict(self) -> dict:
        return {"value": str(self.value), "source": self.source}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SharpBound":
        return cls(value=int(data["value"]), source=data["source"])


def _general_bound(n: int, d: int) -> int:
    """n^(d-1) * prod_{p | n} p^(v_p((d-1)!)), without the report wrapper."""
    return prod(prime_power_index_bound(p, r, d) for p, r in factorize(n))


def known_sharp_bound(n: int, d: int) -> SharpBound | None:
    """Best possible index bound where one is known (d <= 4), else None.

    d=1 is trivial, d=2 is forced by period | index | bound, d=3 equals the
    general bound, and d=4 has the two-branch formula e_3(n)n^3 when 4 | n
    and e_2(n)e_3(n)n^3 otherwise, with e_p(n) = p if p | n else 1.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    if d == 1:
        return SharpBound(1, "trivial bound")
    if d == 2:
        return SharpBound(n, "forced: period divides index divides period")
    if d == 3:
        return SharpBound(_general_bound(n, 3),
                          "realized by 6-dimensional examples")
    if d == 4:
        e2 = 2 if n % 2 == 0 else 1
        e3 = 3 if n % 3 == 0 else 1
        value = e3 * n ** 3 if n % 4 == 0 else e2 * e3 * n ** 3
        return SharpBound(value, "realized by 8-dimensional examples")
    return None


@dataclass(frozen=True)
class BoundReport:
    """Per-prime breakdown of the index bound for period n in dimension 2d."""

    n: int
    d: int
    prime_breakdown: tuple[tuple[int, int, int], ...]  # (p, r, p^((d-1)r + v_p((d-1)!)))
    theorem_a_bound: int
    corollary_b_applies: bool
    known_sharp: SharpBound | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "primes": [
                {"p": p, "r": r, "bound": str(bound)}
                for p, r, bound in self.prime_breakdown
            ],
            "theorem_a": str(self.theorem_a_bound),
            "corollary_b": self.corollary_b_applies,
            "sharp": self.known_sharp.to_json_dict() if self.known_sharp else None,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BoundReport":
        return cls(
            n=data["n"],
            d=data["d"],
            prime_breakdown=tuple(
                (entry["p"], entry["r"], int(entry["bound"])) for entry in data["primes"]),
            theorem_a_bound=int(data["theorem_a"]),
            corollary_b_applies=data["corollary_b"],
            known_sharp=SharpBound.from_json_dict(data["sharp"]) if data["sharp"] else None,
        )


def index_bound(n: int, d: int) -> BoundReport:
    """Evaluate the index bound for period n in dimension 2d.

    >>> index_bound(6, 4).theorem_a_bound
    1296
    >>> index_bound(5, 4).corollary_b_applies
    True
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    breakdown = tuple(
        (p, r, prime_power_index_bound(p, r, d)) for p, r in factorize(n))
    total = prod(bound for _, _, bound in breakdown)
    # Coprimality with (d-1)! two ways: directly, and as "every prime of n
    # exceeds d-1"; they must agree.
    coprime = gcd(n, factorial(d - 1)) == 1
    coprime_by_primes = all(p > d - 1 for p, _, _ in breakdown)
    if coprime != coprime_by_primes:
        raise AssertionError(f"coprimality checks disagree for n={n}, d={d}")
    return BoundReport(
        n=n,
        d=d,
        prime_breakdown=breakdown,
        theorem_a_bound=total,
        corollary_b_applies=coprime,
        known_sharp=known_sharp_bound(n, d),
    )


@dataclass(frozen=True)
class BoundComparison:
    """General bound vs the best known sharp value for the same (n, d)."""

    n: int
    d: int
    theorem_a_bound: int
    known_sharp: SharpBound | None
    ratio: Fraction | None
    sharp_improves: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "theorem_a": str(self.theorem_a_bound),
            "sharp": self.known_sharp.to_json_dict() if self.known_sharp else None,
            "ratio": str(self.ratio) if self.ratio is not None else None,
            "sharp_improves": self.sharp_improves,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BoundComparison":
        return cls(
            n=data["n"],
            d=data["d"],
            theorem_a_bound=int(data["theorem_a"]),
            known_sharp=SharpBound.from_json_dict(data["sharp"]) if data["sharp"] else None,
            ratio=Fraction(data["ratio"]) if data["ratio"] is not None else None,
            sharp_improves=data["sharp_improves"],
        )


def compare_bounds(n: int, d: int) -> BoundComparison:
    """Compare the general bound against the known sharp value, if any.

    >>> compare_bounds(4, 4).ratio
    Fraction(2, 1)
    """
    report = index_bound(n, d)
    sharp = report.known_sharp
    if sharp is None:
        return BoundComparison(n, d, report.theorem_a_bound, None, None, False)
    ratio = Fraction(report.theorem_a_bound, sharp.value)
    improves = sharp.value < report.theorem_a_bound and report.theorem_a_bound % sharp.value == 0
    return BoundComparison(n, d, report.theorem_a_bound, sharp, ratio, improves)

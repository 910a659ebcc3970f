"""Linking forms on H1 of a connected sum of two lens spaces, and the
isotropic elements that a metabolizer could contain.

Summand i is Z_{s_i} with lk(g, g) = sign_i * q_i / s_i. An element of
exact order m is stored as (m, t1, t2), meaning ((s1/m) t1, (s2/m) t2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .exactmath import DomainError, factorize, lcm, legendre, mod1, prime_exponent
from .lens import check_lens


@dataclass(frozen=True)
class SummandForm:
    s: int
    q: int
    sign: int = 1

    def __post_init__(self):
        check_lens(self.s, self.q)
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")

    def unit(self, p: int) -> int:
        """Unit u with the p-primary part of the form equal to u / p^a."""
        a = prime_exponent(self.s, p)
        return self.sign * self.q * (self.s // p**a) % p


def component_order(m: int, t: int) -> int:
    t %= m
    return 1 if t == 0 else m // gcd(t, m)


@dataclass(frozen=True, order=True)
class PairElement:
    m: int
    t1: int
    t2: int

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"element order must be >= 2, got {self.m}")
        if not (0 <= self.t1 < self.m and 0 <= self.t2 < self.m):
            raise DomainError(f"components must lie in [0, {self.m - 1}]: {self}")
        if lcm(component_order(self.m, self.t1), component_order(self.m, self.t2)) != self.m:
            raise DomainError(f"{self} does not have exact order {self.m}")

    def multiple(self, r: int) -> tuple[int, int]:
        return r * self.t1 % self.m, r * self.t2 % self.m

    def __str__(self):
        return f"({self.m}; {self.t1}, {self.t2})"


def _check_fits(f1: SummandForm, f2: SummandForm, z: PairElement) -> None:
    if z.t1 and f1.s % z.m:
        raise DomainError(f"order {z.m} does not divide s1={f1.s}")
    if z.t2 and f2.s % z.m:
        raise DomainError(f"order {z.m} does not divide s2={f2.s}")


def _link_numerator(f1: SummandForm, f2: SummandForm, t1: int, t2: int) -> int:
    return f1.sign * f1.q * f1.s * t1 * t1 + f2.sign * f2.q * f2.s * t2 * t2


def self_link(f1: SummandForm, f2: SummandForm, z: PairElement) -> Fraction:
    _check_fits(f1, f2, z)
    return mod1(Fraction(_link_numerator(f1, f2, z.t1, z.t2), z.m * z.m))


def _canonical(m: int, t1: int, t2: int, units: list[int]) -> tuple[int, int]:
    return min((r * t1 % m, r * t2 % m) for r in units)


def candidates(f1: SummandForm, f2: SummandForm, m: int) -> list[PairElement]:
    """Isotropic elements of exact order m, one generator per cyclic subgroup.

    Each subgroup is represented by its lexicographically least generator.
    The list puts elements with nonzero first component first, then sorts
    by (t1, t2).
    """
    if m < 2:
        raise DomainError(f"order must be >= 2, got {m}")
    m2 = m * m
    units = [r for r in range(1, m) if gcd(r, m) == 1]
    range1 = range(m) if f1.s % m == 0 else (0,)
    range2 = range(m) if f2.s % m == 0 else (0,)
    seen = set()
    for t1 in range1:
        for t2 in range2:
            if (t1, t2) == (0, 0) or _link_numerator(f1, f2, t1, t2) % m2:
                continue
            if lcm(component_order(m, t1), component_order(m, t2)) != m:
                continue
            seen.add(_canonical(m, t1, t2, units))
    return [PairElement(m, a, b) for a, b in sorted(seen, key=lambda z: (z[0] == 0, z))]


def forced_orders(s1: int, s2: int) -> list[int]:
    """Orders m for which any metabolizer must contain an element of order m.

    Each prime dividing both s1 and s2 has a rank-two primary part, which the
    cyclic summand cannot absorb, so the metabolizer meets it. Products of
    such primes are forced by adding elements of coprime order.
    """
    g = gcd(s1, s2)
    if g < 2:
        return []
    primes = [p for p, _ in factorize(g)]
    return sorted(prod(c) for k in range(1, len(primes) + 1) for c in combinations(primes, k))


def parity_obstruction(f1: SummandForm, f2: SummandForm) -> int | None:
    """Smallest odd prime at which the form cannot be cyclic plus metabolic.

    At a prime p dividing both summands to odd powers, the primary form is
    Witt-equivalent to <u1> + <u2> over F_p; it is representable by a form
    of rank at most one iff -u1*u2 is a square mod p. For K # K this is the
    familiar rule: p = 3 mod 4 with odd exponent obstructs.
    """
    g = gcd(f1.s, f2.s)
    if g < 2:
        return None
    for p, _ in factorize(g):
        if p == 2:
            continue
        if prime_exponent(f1.s, p) % 2 and prime_exponent(f2.s, p) % 2:
            if legendre(-f1.unit(p) * f2.unit(p), p) == -1:
                return p
    return None

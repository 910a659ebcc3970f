"""Casson-Gordon invariants of lens spaces L(s, q) for characters of order m | s.

``sigma(s, q, m, r)`` is the invariant at the r-th multiple of q times a
fixed order-m character, computed as four times (area minus weighted
lattice count) of the triangle with legs n*r and q*r/m, where n = s/m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Mapping

from .exactmath import DomainError, is_prime, mod_inverse
from .lattice import area, weighted_count, weighted_quarters


@dataclass(frozen=True)
class LensSpace:
    s: int
    q: int

    def __post_init__(self):
        check_lens(self.s, self.q)


def check_lens(s: int, q: int) -> None:
    if s < 2:
        raise DomainError(f"lens space needs s >= 2, got s={s}")
    if not 0 < q < s:
        raise DomainError(f"lens space needs 0 < q < s, got q={q}, s={s}")
    if gcd(s, q) != 1:
        raise DomainError(f"lens space needs gcd(s, q) = 1, got s={s}, q={q}")


def _check_order(s: int, m: int) -> None:
    if m < 2 or s % m:
        raise DomainError(f"character order m={m} must be >= 2 and divide s={s}")


@lru_cache(maxsize=1 << 16)
def _sigma(s: int, q: int, m: int, r: int) -> Fraction:
    # 4 * (area - count) with area = x*a/(2b) and count = quarters/4
    x = (s // m) * r
    g = gcd(q * r, m)
    a, b = q * r // g, m // g
    return Fraction(2 * x * a - weighted_quarters(x, a, b) * b, b)


def sigma_lattice(s: int, q: int, m: int, r: int) -> Fraction:
    """The same invariant written literally as 4 * (area - weighted count)."""
    sigma(s, q, m, r)
    x, y = (s // m) * r, Fraction(q * r, m)
    return 4 * (area(x, y) - weighted_count(x, y))


def sigma(s: int, q: int, m: int, r: int) -> Fraction:
    check_lens(s, q)
    _check_order(s, m)
    if not 0 < r < m:
        raise DomainError(f"multiple r={r} must satisfy 0 < r < m={m}")
    return _sigma(s, q, m, r)


def sigma_by_character_multiple(s: int, q: int, m: int, t: int) -> Fraction:
    """Invariant at the t-th multiple of the base order-m character.

    The base character is the one whose q-th multiple is indexed r = 1 by
    :func:`sigma`, so this is sigma at r = t * q^{-1} mod m.
    """
    check_lens(s, q)
    _check_order(s, m)
    t %= m
    if t == 0:
        raise DomainError("t must be nonzero mod m")
    if gcd(q, m) != 1:
        raise DomainError(f"q={q} is not a unit mod m={m}")
    return _sigma(s, q, m, t * mod_inverse(q % m, m) % m)


def sigma_closed_q1(s: int, m: int, r: int) -> Fraction:
    """(2n/m) r^2 - 2n r + 1 with n = s/m; equals sigma(s, 1, m, r)."""
    _check_order(s, m)
    if not 0 < r < m:
        raise DomainError(f"multiple r={r} must satisfy 0 < r < m={m}")
    n = s // m
    return Fraction(2 * n * r * r, m) - 2 * n * r + 1


@dataclass(frozen=True)
class CharacterOrbit:
    space: LensSpace
    order: int
    values: Mapping[int, Fraction] = field(repr=False)
    surjective_only: bool = False

    def __iter__(self):
        return iter(sorted(self.values.items()))

    def min(self) -> Fraction:
        return min(self.values.values())

    def max(self) -> Fraction:
        return max(self.values.values())


def orbit(s: int, q: int, m: int, surjective_only: bool = False) -> CharacterOrbit:
    check_lens(s, q)
    _check_order(s, m)
    rs = range(1, m)
    if surjective_only:
        rs = [r for r in rs if gcd(r * q % m, m) == 1]
    values = {r: _sigma(s, q, m, r) for r in rs}
    return CharacterOrbit(LensSpace(s, q), m, MappingProxyType(values), surjective_only)


@dataclass(frozen=True)
class MinMax:
    min: Fraction
    argmin: frozenset[int]
    max: Fraction
    argmax: frozenset[int]


def orbit_minmax_negsigma_q1(s: int, m: int) -> MinMax:
    """Extremes of -sigma(L(s,1), r rho) over 0 < r < m for an odd prime m.

    The min 2n(1 - 1/m) - 1 sits at r in {1, m-1} and the max
    (n/2)(m - 1/m) - 1 at r = (m +- 1)/2. Both are checked against the
    orbit itself; a disagreement is a bug and raises.
    """
    if m == 2 or not is_prime(m):
        raise DomainError(f"order must be an odd prime, got {m}")
    _check_order(s, m)
    neg = {r: -v for r, v in orbit(s, 1, m).values.items()}
    n = s // m
    lo = 2 * n * (1 - Fraction(1, m)) - 1
    hi = Fraction(n, 2) * (m - Fraction(1, m)) - 1
    got_lo, got_hi = min(neg.values()), max(neg.values())
    if (got_lo, got_hi) != (lo, hi):
        raise AssertionError(f"extremes {got_lo}, {got_hi} disagree with closed form {lo}, {hi}")
    return MinMax(
        lo,
        frozenset(r for r, v in neg.items() if v == lo),
        hi,
        frozenset(r for r, v in neg.items() if v == hi),
    )


def orbit_abs_summinmax(s: int, q: int, m: int) -> Fraction:
    """|max sigma + min sigma| over the surjective order-m characters."""
    o = orbit(s, q, m, surjective_only=True)
    return abs(o.max() + o.min())

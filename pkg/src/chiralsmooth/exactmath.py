"""Exact rational arithmetic and the small amount of number theory the
obstruction engine needs.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator. Nothing in the package touches floating point except
the optional decimal column of the CLI.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction
Factorization = list[tuple[int, int]]


class DomainError(ValueError):
    """An input violates the precondition of an operation."""


def as_rational(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def mod1(x: Fraction) -> Fraction:
    """Representative of ``x`` in [0, 1)."""
    x = as_rational(x)
    return Fraction(x.numerator % x.denominator, x.denominator)


def format_rational(x: Fraction) -> str:
    """``num/den``, or just ``num`` for integers."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division, primes ascending."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    out: Factorization = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def recompose(fact: Factorization) -> int:
    out = 1
    for p, e in fact:
        out *= p**e
    return out


def prime_exponent(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n`` (``n`` nonzero)."""
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def mod_inverse(a: int, m: int) -> int:
    """The inverse of ``a`` modulo ``m``, in [1, m-1] (0 when m is 1 is not allowed)."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


def sqrt_minus_one(p: int) -> set[int]:
    """All alpha in [1, p-1] with alpha**2 = -1 mod p, for an odd prime p.

    Empty exactly when p = 3 mod 4. Otherwise a root is found from a
    quadratic non-residue c as c**((p-1)/4), and the pair {a, p-a} returned.
    """
    if p % 2 == 0 or not is_prime(p):
        raise DomainError(f"sqrt_minus_one needs an odd prime, got {p}")
    if p % 4 == 3:
        return set()
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            a = pow(c, (p - 1) // 4, p)
            return {a, p - a}
    raise AssertionError("no quadratic non-residue found")  # unreachable for odd primes


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: 1, -1, or 0."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_admissible_order(s: int) -> bool:
    """True iff every prime p = 3 mod 4 divides ``s`` to an even power.

    A False answer means the linking form on H1 of the double branched cover
    of K # K carries no metabolizer of the required shape.
    """
    if s < 3 or s % 2 == 0:
        raise DomainError(f"s must be odd and >= 3, got {s}")
    return all(e % 2 == 0 for p, e in factorize(s) if p % 4 == 3)


def admissible_list(N: int) -> list[int]:
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    return [s for s in range(3, N + 1, 2) if is_admissible_order(s)]

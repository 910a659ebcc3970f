"""Weighted lattice-point counts in the right triangles with vertices
(0, 0), (x, 0), (0, y).

Weights: interior points 1, points interior to an edge 1/2, nonzero lattice
vertices 1/4, the origin 0. Three paths compute the same count: a floor-sum
closed form used everywhere, a per-column loop, and a bounding-box
enumeration kept as the reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactmath import DomainError, as_rational


@dataclass(frozen=True)
class Triangle:
    x: int
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "y", as_rational(self.y))
        if not isinstance(self.x, int) or self.x < 1:
            raise DomainError(f"triangle leg x must be a positive integer, got {self.x!r}")
        if self.y <= 0:
            raise DomainError(f"triangle leg y must be positive, got {self.y}")


def _triangle(t, y=None) -> Triangle:
    if isinstance(t, Triangle):
        return t
    return Triangle(t, y)


def area(t: Triangle | int, y=None) -> Fraction:
    t = _triangle(t, y)
    return t.x * t.y / 2


def floor_sum(n: int, m: int, a: int, b: int) -> int:
    """sum(floor((a*i + b) / m) for i in range(n)) for a, b >= 0, m >= 1."""
    total = 0
    while True:
        if a >= m:
            total += (n - 1) * n // 2 * (a // m)
            a %= m
        if b >= m:
            total += n * (b // m)
            b %= m
        y_max = a * n + b
        if y_max < m:
            return total
        n, b = divmod(y_max, m)
        m, a = a, m


def _left_edge_quarters(a: int, b: int) -> int:
    # (0, j) for 0 < j < y weigh 1/2; (0, y) is a vertex when y is an integer
    top, rem = divmod(a, b)
    return 2 * (top - 1) + 1 if rem == 0 else 2 * top


def weighted_count(t: Triangle | int, y=None) -> Fraction:
    """Weighted lattice count in O(log) integer operations.

    Column i (0 < i < x) holds the bottom-edge point, floor(h_i) points
    above it with h_i = a(x - i)/(bx), and the top one of those sits on the
    hypotenuse exactly when bx divides a(x - i).
    """
    t = _triangle(t, y)
    return Fraction(weighted_quarters(t.x, t.y.numerator, t.y.denominator), 4)


def weighted_quarters(x: int, a: int, b: int) -> int:
    """Four times the weighted count for legs x and a/b (a/b reduced)."""
    heights = floor_sum(x, b * x, a, 0)  # sum over j = x - i in [0, x)
    on_hyp = (x - 1) // (b * x // gcd(a, b * x))
    return _left_edge_quarters(a, b) + 2 * (x - 1) + 4 * heights - 2 * on_hyp + 1


def weighted_count_columns(t: Triangle | int, y=None) -> Fraction:
    """Weighted lattice count, summed column by column in integer arithmetic."""
    t = _triangle(t, y)
    x, a, b = t.x, t.y.numerator, t.y.denominator
    # Column i has hypotenuse height a*(x - i) / (b*x).
    quarters = _left_edge_quarters(a, b)  # units of 1/4
    for i in range(1, x):
        num = a * (x - i)
        den = b * x
        h, r = divmod(num, den)
        # bottom point (i, 0) is on an edge; (i, j) for 0 < j <= h is inside
        # unless it lies on the hypotenuse.
        quarters += 2
        if r == 0:
            quarters += 4 * (h - 1) + 2
        else:
            quarters += 4 * h
    quarters += 1  # vertex (x, 0)
    return Fraction(quarters, 4)


def weighted_count_bruteforce(t: Triangle | int, y=None) -> Fraction:
    """Reference count: test every lattice point of the bounding box."""
    t = _triangle(t, y)
    x, u, v = t.x, t.y.numerator, t.y.denominator
    # i/x + j/y <= 1  <=>  i*u + j*v*x <= x*u
    rhs = x * u
    quarters = 0
    for i in range(0, x + 1):
        for j in range(0, u // v + 1):
            if i == 0 and j == 0:
                continue
            h = i * u + j * v * x
            if h > rhs:
                break
            edges = (j == 0) + (i == 0) + (h == rhs)
            quarters += (4, 2, 1)[edges]
    return Fraction(quarters, 4)

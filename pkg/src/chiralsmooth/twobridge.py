"""Two-bridge knots B(s, q), their continued fractions, and candidate
neighbors reached by smoothing one crossing of a twist region.

An expansion [a0, a1, ..., ak] stands for a0 + 1/(a1 + 1/(... + 1/ak)).
Reducing its value to s/q (lowest terms) names the knot B(|s|, q mod |s|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactmath import DomainError

MAX_WIDE_EXPANSIONS = 4096


@dataclass(frozen=True, order=True)
class TwoBridge:
    s: int
    q: int

    def __post_init__(self):
        if self.s < 3 or self.s % 2 == 0:
            raise DomainError(f"B(s,q) is a knot only for odd s >= 3, got s={self.s}")
        if not 0 < self.q < self.s or gcd(self.s, self.q) != 1:
            raise DomainError(f"need 0 < q < s, gcd(s, q) = 1; got B({self.s},{self.q})")

    def __str__(self):
        return f"B({self.s},{self.q})"


def collapse_zero(entries) -> list[int]:
    """Remove interior zeros with a + 1/(0 + 1/(b + x)) = (a + b) + x."""
    out = list(entries)
    if not out:
        raise DomainError("empty continued fraction")
    if len(out) > 1 and out[-1] == 0:
        raise DomainError("trailing zero entry has no value")
    i = 1
    while i < len(out):
        if out[i] == 0:
            if i == len(out) - 1:
                raise DomainError("trailing zero entry has no value")
            out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            i = max(i - 1, 1)
        else:
            i += 1
    return out


def cf_eval(entries) -> Fraction:
    entries = collapse_zero(entries)
    value = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        if value == 0:
            raise DomainError(f"zero denominator evaluating {entries}")
        value = a + 1 / value
    return value


def _nearest(x: Fraction) -> int:
    # round() on Fraction rounds half to even
    return round(x)


def _expand(x: Fraction, choose) -> list[int]:
    out = []
    while True:
        a = choose(x)
        out.append(a)
        rest = x - a
        if rest == 0:
            return out
        x = 1 / rest


def check_pair(s: int, q: int) -> None:
    TwoBridge(s, q)


def cf_expand(s: int, q: int) -> list[int]:
    """Nearest-integer expansion of s/q."""
    check_pair(s, q)
    return _expand(Fraction(s, q), _nearest)


def regular_expansion(x: Fraction) -> list[int]:
    return _expand(Fraction(x), math.floor)


def all_expansions(x: Fraction, limit: int = MAX_WIDE_EXPANSIONS) -> list[list[int]]:
    """Every expansion of x whose partial quotients are floors or ceilings.

    The denominators strictly drop at each step, so the tree is finite; it
    is still exponential, hence ``limit``.
    """
    found: list[list[int]] = []

    def walk(x: Fraction, prefix: list[int]):
        if len(found) >= limit:
            return
        for a in sorted({math.floor(x), math.ceil(x)}):
            rest = x - a
            if rest == 0:
                if len(found) < limit:
                    found.append(prefix + [a])
                continue
            walk(1 / rest, prefix + [a])

    walk(Fraction(x), [])
    return found


def normalize(s: int, q: int) -> TwoBridge:
    """B(s, q) = B(s, q') when q q' = 1 mod s; pick the smaller."""
    if s < 3 or s % 2 == 0:
        raise DomainError(f"B(s,q) is a knot only for odd s >= 3, got s={s}")
    q %= s
    if gcd(s, q) != 1:
        raise DomainError(f"gcd(s, q) must be 1, got s={s}, q={q}")
    return TwoBridge(s, min(q, pow(q, -1, s)))


def mirror(s: int, q: int) -> TwoBridge:
    check_pair(s, q % s)
    return normalize(s, s - q % s)


def knot_of(value: Fraction) -> TwoBridge | str:
    """Knot named by a continued fraction value, or "link" / "unknot"."""
    num, den = value.numerator, value.denominator
    if num % 2 == 0:
        return "link"
    if abs(num) == 1:
        return "unknot"
    return normalize(abs(num), den if num > 0 else -den)


def generating_expansions(s: int, q: int) -> list[list[int]]:
    """Expansions of B(s, q) the neighbor search starts from.

    Nearest-integer and regular expansions of s/q' and their reversals, then
    every floor/ceiling expansion, for q' running over q, q^{-1} and their
    negative representatives mod s. Only expansions naming B(s, q) itself
    (not its mirror) are kept.
    """
    check_pair(s, q)
    target = normalize(s, q)
    qi = pow(q, -1, s)
    reps = list(dict.fromkeys((q, qi, q - s, qi - s)))
    out: list[list[int]] = []
    for r in reps:
        x = Fraction(s, r)
        for e in (_expand(x, _nearest), regular_expansion(x)):
            out += [e, e[::-1]]
    for r in reps:
        out += all_expansions(Fraction(s, r), limit=MAX_WIDE_EXPANSIONS // len(reps))
    keep = []
    for e in out:
        if e in keep:
            continue
        try:
            if knot_of(cf_eval(e)) == target:
                keep.append(e)
        except DomainError:
            continue
    return keep


@dataclass(frozen=True)
class Move:
    """One entry of ``expansion`` changed from ``before`` to ``after``.

    For an insertion, ``expansion`` is ``base`` with one entry c split as
    (a, 0, c - a), and the inserted 0 becomes +-1.
    """

    expansion: tuple[int, ...]
    index: int
    before: int
    after: int
    base: tuple[int, ...] | None = None

    @property
    def kind(self) -> str:
        if self.base is not None:
            return "insert"
        return "smooth" if abs(self.after) < abs(self.before) else "increase"

    def __str__(self):
        body = ",".join(str(a) for a in self.expansion)
        text = f"[{body}] entry {self.index}: {self.before}→{self.after}"
        if self.base is not None:
            text += " (split from [" + ",".join(str(a) for a in self.base) + "])"
        return text


@dataclass(frozen=True)
class Neighbor:
    result: TwoBridge | str
    value: Fraction
    moves: tuple[Move, ...]

    @property
    def move(self) -> Move:
        return self.moves[0]


def _moves(e: list[int], widen: bool, increase: bool):
    for i, a in enumerate(e):
        if a == 0:
            continue
        sgn = 1 if a > 0 else -1
        yield Move(tuple(e), i, a, a - sgn)
        if increase:
            yield Move(tuple(e), i, a, a + sgn)
    if widen:
        bound = max(abs(a) for a in e) + 2
        for i, c in enumerate(e):
            for a in range(-bound, bound + 1):
                split = e[:i] + [a, 0, c - a] + e[i + 1 :]
                for eps in (1, -1):
                    yield Move(tuple(split), i + 1, 0, eps, base=tuple(e))


def smoothing_neighbors(s: int, q: int, widen: bool = False, increase: bool = False) -> list[Neighbor]:
    """Knots (and links) one twist-region change away from B(s, q).

    Each nonzero entry e of each generating expansion becomes e - sign(e),
    removing one crossing. ``increase`` also tries e + sign(e). ``widen``
    adds the inverse moves: split an entry c into (a, 0, c - a) and turn
    the 0 into +-1. A band move is reversible, so these are smoothing
    candidates too. The result is a sufficient supply of neighbors, not a
    complete one.
    """
    found: dict[object, tuple[TwoBridge | str, Fraction, list[Move]]] = {}
    for e in generating_expansions(s, q):
        for mv in _moves(e, widen, increase):
            changed = list(mv.expansion)
            changed[mv.index] = mv.after
            try:
                v = cf_eval(changed)
            except DomainError:
                continue
            k = knot_of(v)
            key = _result_key(k, v)
            if key not in found:
                found[key] = (k, v, [])
            found[key][2].append(mv)
    out = [Neighbor(k, v, tuple(sorted(ms, key=_move_key))) for k, v, ms in found.values()]
    return sorted(out, key=_neighbor_key)


def _move_key(mv: Move):
    # shortest diagram first
    return (len(mv.expansion), sum(abs(a) for a in mv.expansion), mv.expansion, mv.index, mv.after)


def _result_key(k, v: Fraction):
    if k != "link":
        return k
    n = abs(v.numerator)
    if n < 2:
        return ("link", 0, 0)
    d = v.denominator * (1 if v.numerator > 0 else -1) % n
    return ("link", n, min(d, pow(d, -1, n)))


def _neighbor_key(n: Neighbor):
    if isinstance(n.result, TwoBridge):
        return (0, n.result.s, n.result.q, "")
    return (1, abs(n.value.numerator), n.value.denominator, n.result)

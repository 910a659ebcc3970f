"""Casson-Gordon obstructions to chiral smoothings and to single smoothings
between two-bridge knots.

A smoothing from K to J gives a ribbon Mobius band bounded by K # -J. Its
double branched cover W has a metabolizer M in H1 of the boundary, and
every character coming from M satisfies

    |sigma(M, rho)| <= 3 + beta_1(cover) / (m - 1).

The engine asks, for each order m that M is forced to contain, whether
every isotropic element of order m has some multiple breaking this bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactmath import DomainError, lcm
from .lens import sigma
from .linkform import (
    PairElement,
    SummandForm,
    candidates,
    component_order,
    forced_orders,
    parity_obstruction,
)

OBSTRUCTED = "Obstructed"
NOT_OBSTRUCTED = "NotObstructed"


@dataclass(frozen=True)
class BoundContext:
    m: int
    m1: int
    m2: int

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"character order must be >= 2, got {self.m}")
        if self.m1 < 1 or self.m2 < 1 or lcm(self.m1, self.m2) != self.m:
            raise DomainError(f"summand orders {self.m1}, {self.m2} inconsistent with m={self.m}")


def betti1_cover(ctx: BoundContext) -> int:
    # m/m1 + m/m2 rational-homology-sphere pieces joined along m spheres
    return ctx.m + 1 - ctx.m // ctx.m1 - ctx.m // ctx.m2


def cg_bound(ctx: BoundContext) -> Fraction:
    return 3 + Fraction(betti1_cover(ctx), ctx.m - 1)


@dataclass(frozen=True)
class Evaluation:
    """sigma of the character r*z on the connected sum, with its bound."""

    r: int
    value: Fraction
    bound: Fraction
    context: BoundContext

    @property
    def violates(self) -> bool:
        return abs(self.value) > self.bound


def _component(f: SummandForm, m: int, t: int) -> tuple[int, Fraction]:
    # With lk(g, g) = q/s, the element (s/mi) k links g to k q / mi, which is
    # the character sigma indexes by r = k.
    mi = component_order(m, t)
    if mi == 1:
        return 1, Fraction(0)
    return mi, f.sign * sigma(f.s, f.q, mi, t // (m // mi))


def evaluate(f1: SummandForm, f2: SummandForm, z: PairElement, r: int) -> Evaluation:
    t1, t2 = z.multiple(r)
    m1, v1 = _component(f1, z.m, t1)
    m2, v2 = _component(f2, z.m, t2)
    ctx = BoundContext(z.m // gcd(r, z.m), m1, m2)
    return Evaluation(r, v1 + v2, cg_bound(ctx), ctx)


def candidate_orbit(f1: SummandForm, f2: SummandForm, z: PairElement) -> list[Evaluation]:
    return [evaluate(f1, f2, z, r) for r in range(1, z.m)]


def candidate_violation(f1: SummandForm, f2: SummandForm, z: PairElement) -> Evaluation | None:
    """First multiple r of z whose invariant exceeds its bound, if any."""
    for r in range(1, z.m):
        ev = evaluate(f1, f2, z, r)
        if ev.violates:
            return ev
    return None


@dataclass(frozen=True)
class Witness:
    candidate: PairElement
    evaluation: Evaluation


@dataclass(frozen=True)
class Verdict:
    """Outcome for one connected sum.

    ``witnesses`` maps every forced order at which all candidates fail to
    one violating evaluation per candidate; ``order`` is the smallest such.
    ``survivors`` maps every other forced order to its surviving candidates.
    """

    status: str
    forms: tuple[SummandForm, SummandForm]
    reason: str | None = None  # "LinkingForm" | "NoIsotropicElement" | "CassonGordon"
    prime: int | None = None
    order: int | None = None
    witnesses: dict[int, tuple[Witness, ...]] = field(default_factory=dict)
    survivor: PairElement | None = None
    survivor_orbit: tuple[Evaluation, ...] = ()
    survivors: dict[int, tuple[PairElement, ...]] = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.status == OBSTRUCTED


def obstruct_forms(f1: SummandForm, f2: SummandForm) -> Verdict:
    """Decide whether f1 # f2 is obstructed from bounding a ribbon Mobius band."""
    forms = (f1, f2)
    p = parity_obstruction(f1, f2)
    if p is not None:
        return Verdict(OBSTRUCTED, forms, "LinkingForm", prime=p)
    survivors: dict[int, tuple[PairElement, ...]] = {}
    witnesses: dict[int, tuple[Witness, ...]] = {}
    for m in forced_orders(f1.s, f2.s):
        cands = candidates(f1, f2, m)
        if not cands:
            return Verdict(OBSTRUCTED, forms, "NoIsotropicElement", order=m)
        failed, alive = [], []
        for z in cands:
            ev = candidate_violation(f1, f2, z)
            if ev is None:
                alive.append(z)
            else:
                failed.append(Witness(z, ev))
        if alive:
            survivors[m] = tuple(alive)
        else:
            witnesses[m] = tuple(failed)
    if witnesses:
        return Verdict(
            OBSTRUCTED, forms, "CassonGordon", order=min(witnesses), witnesses=witnesses, survivors=survivors
        )
    if not survivors:
        return Verdict(NOT_OBSTRUCTED, forms)
    first = survivors[min(survivors)][0]
    return Verdict(
        NOT_OBSTRUCTED,
        forms,
        survivor=first,
        survivor_orbit=tuple(candidate_orbit(f1, f2, first)),
        survivors=survivors,
    )


def check_knot(s: int, q: int) -> None:
    if s < 3 or s % 2 == 0:
        raise DomainError(f"B(s,q) is a knot only for odd s >= 3, got s={s}")
    if not 0 < q < s or gcd(s, q) != 1:
        raise DomainError(f"need 0 < q < s with gcd(s, q) = 1, got s={s}, q={q}")


def chiral_obstruct(s: int, q: int) -> Verdict:
    """Obstructed means B(s, q) supports no chiral smoothing."""
    check_knot(s, q)
    f = SummandForm(s, q, 1)
    return obstruct_forms(f, f)


def torus2_obstruct(m: int) -> Verdict:
    if m < 3 or m % 2 == 0:
        raise DomainError(f"T(2, m) needs odd m >= 3, got {m}")
    return chiral_obstruct(m, 1)


def survey_torus2(max_m: int) -> list[tuple[int, Verdict]]:
    if max_m < 3:
        raise DomainError(f"survey range must reach 3, got {max_m}")
    return [(m, torus2_obstruct(m)) for m in range(3, max_m + 1, 2)]


def pair_obstruct(s1: int, q1: int, s2: int, q2: int) -> Verdict:
    """Obstructed means no single smoothing turns B(s1, q1) into B(s2, q2)."""
    check_knot(s1, q1)
    check_knot(s2, q2)
    return obstruct_forms(SummandForm(s1, q1, 1), SummandForm(s2, q2, -1))


def doubled_obstruct(sigma_1_5, sigma_2_5) -> bool:
    """True when D+(K, -1) supports no chiral smoothing, given two
    Levine-Tristram signatures of K at 1/5 and 2/5."""
    return abs(Fraction(sigma_1_5) + Fraction(sigma_2_5)) >= 2

from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiralsmooth.exactmath import DomainError
from chiralsmooth.twobridge import (
    TwoBridge,
    all_expansions,
    cf_eval,
    cf_expand,
    collapse_zero,
    generating_expansions,
    knot_of,
    mirror,
    normalize,
    regular_expansion,
    smoothing_neighbors,
)

knots = st.integers(3, 501).filter(lambda s: s % 2).flatmap(
    lambda s: st.tuples(st.just(s), st.sampled_from([q for q in range(1, s) if gcd(q, s) == 1]))
)


def test_eval_examples():
    assert cf_eval([4, -2, 2, -1, -5]) == F(25, 8)
    assert cf_eval([4, -2, 2, 0, -5]) == F(25, 7)
    assert cf_eval([7]) == 7
    with pytest.raises(DomainError):
        cf_eval([1, -1, 1])  # 1 + 1/(-1 + 1/1) divides by zero
    with pytest.raises(DomainError):
        cf_eval([])


def test_collapse_examples():
    assert collapse_zero([4, -2, 2, 0, -5]) == [4, -2, -3]
    assert collapse_zero([1, 0, 1]) == [2]
    assert collapse_zero([3]) == [3]
    assert collapse_zero([1, 0, 2, 0, 3]) == [6]
    with pytest.raises(DomainError):
        collapse_zero([2, 0])


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_collapse_preserves_value(entries):
    if entries[-1] == 0 and len(entries) > 1:
        return

    def naive(es):
        v = F(es[-1])
        for a in reversed(es[:-1]):
            v = a + 1 / v
        return v

    try:
        want = naive(entries)
    except ZeroDivisionError:
        return
    try:
        got = cf_eval(entries)
    except DomainError:
        return
    assert got == want


@given(knots)
def test_round_trip(k):
    s, q = k
    assert cf_eval(cf_expand(s, q)) == F(s, q)
    assert cf_eval(regular_expansion(F(s, q))) == F(s, q)


def test_expand_examples():
    assert cf_expand(7, 1) == [7]
    assert cf_eval(cf_expand(25, 8)) == F(25, 8)
    assert cf_eval(cf_expand(25, 7)) == F(25, 7)
    with pytest.raises(DomainError):
        cf_expand(24, 7)


def test_all_expansions():
    exps = all_expansions(F(25, 8))
    assert [4, -2, 2, -1, -5] in exps
    assert all(cf_eval(e) == F(25, 8) for e in exps)
    assert len(all_expansions(F(25, 8), limit=3)) == 3


def test_normalize_mirror_examples():
    assert mirror(25, 1) == TwoBridge(25, 24)
    # 23^-1 = 12 mod 25, so the normalized form of (25, 23) is (25, 12)
    assert mirror(25, 2) == normalize(25, 23) == TwoBridge(25, 12)
    assert normalize(17, 9) == TwoBridge(17, 2)
    with pytest.raises(DomainError):
        normalize(25, 5)
    with pytest.raises(DomainError):
        TwoBridge(24, 5)


@given(knots)
def test_normalize_identities(k):
    s, q = k
    n = normalize(s, q)
    assert normalize(n.s, n.q) == n
    assert normalize(s, pow(q, -1, s)) == n
    m = mirror(s, q)
    assert mirror(m.s, m.q) == n


def test_knot_of():
    assert knot_of(F(25, 8)) == TwoBridge(25, 8)
    assert knot_of(F(-25, 8)) == normalize(25, 17)
    assert knot_of(F(2)) == "link"
    assert knot_of(F(1, 3)) == "unknot"


def test_neighbor_examples():
    found = smoothing_neighbors(25, 8)
    by_result = {n.result: n for n in found}
    assert normalize(25, 7) in by_result
    assert str(by_result[normalize(25, 7)].move) == "[4,-2,2,-1,-5] entry 3: -1→0"
    links = [n for n in smoothing_neighbors(3, 1) if n.result == "link"]
    assert any(n.value == 2 and str(n.move) == "[3] entry 0: 3→2" for n in links)


def test_neighbors_25_7_needs_widen():
    assert normalize(25, 8) not in {n.result for n in smoothing_neighbors(25, 7)}
    assert normalize(25, 8) in {n.result for n in smoothing_neighbors(25, 7, widen=True)}


@pytest.mark.parametrize("k", [(25, 8), (17, 2), (9, 2), (13, 5)])
@pytest.mark.parametrize("widen,increase", [(False, False), (False, True), (True, False)])
def test_neighbor_structure(k, widen, increase):
    target = normalize(*k)
    gens = generating_expansions(*k)
    assert gens and all(knot_of(cf_eval(e)) == target for e in gens)
    for n in smoothing_neighbors(*k, widen=widen, increase=increase):
        for mv in n.moves:
            assert abs(mv.after - mv.before) == 1
            if mv.base is None:
                assert list(mv.expansion) in gens
                assert mv.kind == "smooth" or increase
            else:
                assert widen and list(mv.base) in gens
                assert cf_eval(mv.expansion) == cf_eval(mv.base) and mv.before == 0
            changed = list(mv.expansion)
            changed[mv.index] = mv.after
            # moves merged into one neighbor may reach different fractions of the same knot
            assert knot_of(cf_eval(changed)) == n.result == knot_of(n.value)


def test_neighbors_domain():
    with pytest.raises(DomainError):
        smoothing_neighbors(25, 10)

"""Print the worked values and verdicts: sigma tables, the torus survey,
B(117,20) statistics, and the B(25, q) pairwise checks."""

from chiralsmooth.exactmath import admissible_list, format_rational as fr
from chiralsmooth.lens import orbit, orbit_abs_summinmax
from chiralsmooth.obstruct import chiral_obstruct, pair_obstruct, survey_torus2
from chiralsmooth.twobridge import normalize, smoothing_neighbors


def main():
    print("B(17,2), order 17:", ", ".join(f"{r}:{fr(v)}" for r, v in orbit(17, 2, 17) if r <= 8))
    v = chiral_obstruct(17, 2)
    for w in v.witnesses[17]:
        print(f"  {w.candidate} r={w.evaluation.r} value={fr(w.evaluation.value)} bound={fr(w.evaluation.bound)}")

    print("L(5,2), order 5:", sorted({fr(x) for x in orbit(5, 2, 5).values.values()}))
    for q in (1, 2, 8, 7):
        print(f"L(25,{q}), order 5:", [fr(x) for _, x in orbit(25, q, 5)])

    print("admissible s <= 100:", admissible_list(100))
    table = survey_torus2(199)
    print("T(2,m) not obstructed, m <= 199:", [m for m, v in table if not v.obstructed])

    for m in (3, 13, 39):
        print(f"B(117,20) |max+min| at order {m}: {fr(orbit_abs_summinmax(117, 20, m))}")
    v = chiral_obstruct(117, 20)
    print(f"B(117,20): {v.status}, witness orders {sorted(v.witnesses)}")

    quad = [(25, 1), (25, 24), (25, 2), (25, 23)]
    for i, a in enumerate(quad):
        for b in quad[i + 1 :]:
            print(f"B({a[0]},{a[1]}) -> B({b[0]},{b[1]}): {pair_obstruct(*a, *b).status}")
    v = pair_obstruct(25, 8, 25, 7)
    print(f"B(25,8) -> B(25,7): {v.status}, survivor {v.survivor}")
    hit = [n for n in smoothing_neighbors(25, 8) if n.result == normalize(25, 7)]
    print("  via", hit[0].move)


if __name__ == "__main__":
    main()

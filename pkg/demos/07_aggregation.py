"""Aggregating operator families, and when aggregation commutes.

A family of same-arity connectives can be pooled through an aggregation
function. Pooling implications gives an implication; pooling suitable
connectives gives a connective of the same kind; and for a strong
negation the two routes to a pooled implication coincide.
"""

import overlapkit as ok


def main() -> None:
    nz = ok.make_standard()

    print("== pooling connectives ==")
    fam = ok.OperatorFamily(members=(ok.catalog("O_P", p=1), ok.catalog("O_min")))
    pooled = ok.aggregate(ok.make_aggregation("mean", 2), fam)
    print(f"{pooled.label}")
    print(f"  at (0.5, 0.5): {float(pooled(0.5, 0.5)):.4f} ((0.25 + 0.5)/2)")

    print()
    print("== pooled general overlaps stay general overlaps ==")
    gos = ok.OperatorFamily(members=(ok.catalog("GO_max"), ok.catalog("O_P", p=2)))
    agg_go = ok.aggregate_go(ok.make_aggregation("mean", 2), gos)
    rep = ok.check_axioms(agg_go, "GO")
    print(f"{agg_go.label}: axioms {'PASS' if rep.passed else 'FAIL'}")

    print()
    print("== pooled implications stay implications ==")
    imps = ok.OperatorFamily(
        members=(ok.make_gon(ok.catalog("GO_max"), nz),
                 ok.make_gon(ok.catalog("O_P", p=2), nz))
    )
    pooled_imp = ok.aggregate(ok.make_aggregation("min", 2), imps)
    rep = ok.check_implication_axioms(pooled_imp)
    print(f"{pooled_imp.label}: axioms {'PASS' if rep.passed else 'FAIL'}")

    print()
    print("== commutation for a strong negation ==")
    print("route 1: build each implication, then pool them")
    print("route 2: pool the connectives through the dual aggregation,")
    print("         then build one implication")
    for name in ("mean", "min", "max", "product"):
        rep = ok.check_commutes(ok.make_aggregation(name, 2), gos, nz)
        print(f"  {name:<8} {rep.status} over {rep.samples_checked} samples")

    print()
    print("== the strong hypothesis matters ==")
    try:
        ok.check_commutes(ok.make_aggregation("mean", 2), gos, ok.make_power_strict(2))
    except ok.PreconditionError as err:
        print(f"with a strict non-involutive negation: {err}")


if __name__ == "__main__":
    main()

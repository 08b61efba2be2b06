"""Duality roundtrips: grouping duals, equal implications, and recovery.

Three related facts, all checked numerically here:

1. Dualizing an overlap through a strict negation gives a grouping, and
   dualizing back returns the original connective.
2. The implication built from a connective equals the implication built
   from its dual grouping with the inverse negation.
3. A strict negation lets the source connective be recovered from its
   implication by inverting the negation on both sides.
"""

import overlapkit as ok


def main() -> None:
    nz = ok.make_standard()
    n2 = ok.make_power_strict(2)

    print("== dual roundtrip through two strict negations ==")
    for negation in (nz, n2):
        for name, params in (("O_P", {"p": 1}), ("O_min", {}), ("O_V", {})):
            o = ok.catalog(name, **params)
            back = ok.overlap_from(ok.grouping_from(o, negation), negation)
            dev = ok.compare(o, back).deviation
            print(f"{o.label:<8} via {negation.label:<8} roundtrip deviation {dev:.2e}")

    print()
    print("== equal implications ==")
    print("building from the connective directly, versus building from its")
    print("dual grouping with the numerically inverted negation:")
    for negation in (nz, n2):
        for name, params in (("O_P", {"p": 1}), ("O_mM", {}), ("O_DB", {})):
            o = ok.catalog(name, **params)
            lhs = ok.make_gon(o, negation)
            rhs = ok.make_gn(ok.grouping_from(o, negation), ok.inverse_negation(negation))
            dev = ok.compare(lhs, rhs).deviation
            print(f"{o.label:<8} with {negation.label:<8} deviation {dev:.2e}")

    print()
    print("== recovering the connective from its implication ==")
    for negation in (nz, n2):
        o = ok.catalog("GO_max")
        rec = ok.recover_go(ok.make_gon(o, negation), negation)
        print(f"{o.label} via {negation.label}: recovered(0.8, 0.9) = "
              f"{float(rec(0.8, 0.9)):.9f} (source gives {float(o(0.8, 0.9)):.2f})")

    print()
    print("== where the dual construction refuses ==")
    print("the thresholded sum of squares hits zero at nonzero arguments,")
    print("so its dual loses the grouping claim and is downgraded:")
    import warnings

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = ok.grouping_from(ok.catalog("GO_max"), nz)
    print(f"result role: {g.role}; warning: {caught[0].message}")


if __name__ == "__main__":
    main()

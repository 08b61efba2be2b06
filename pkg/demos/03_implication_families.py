"""Construct all seven implication families and check the shared axioms.

Every family maps a pair of unit values to a unit value, is antitone in
the first argument, isotone in the second, and hits the three classical
corners. The builders differ in which connectives they compose.
"""

import overlapkit as ok


def main() -> None:
    nz = ok.make_standard()
    instances = [
        ok.make_gon(ok.catalog("GO_max"), nz),
        ok.make_gn(ok.grouping_max(), nz),
        ok.make_ql(ok.catalog("O_P", p=2), ok.grouping_max()),
        ok.make_residual(ok.catalog("O_P", p=1)),
        ok.make_d(ok.grouping_max()),
        ok.make_tn(ok.catalog("O_min"), nz),
        ok.make_crisp_family("C3", 0.5, 0.5),
    ]

    print("== values at a few probe points ==")
    probes = [(0.0, 0.0), (1.0, 0.0), (0.6, 0.2), (1.0, 0.5), (0.3, 0.9)]
    header = " ".join(f"({x},{y})" for x, y in probes)
    print(f"{'family':<34} {header}")
    for imp in instances:
        row = " ".join(f"{float(imp(x, y)):.3f}" for x, y in probes)
        print(f"{imp.label:<34} {row}")

    print()
    print("== implication axioms on the grid ==")
    for imp in instances:
        rep = ok.check_implication_axioms(imp)
        print(f"{imp.label:<34} {'PASS' if rep.passed else 'FAIL'}")

    print()
    print("== one closed form ==")
    print("composing the thresholded sum of squares with the standard")
    print("negation on both sides simplifies to min(1, 1 - x^2 - y^2 + 2y):")
    imp = ok.make_gon(ok.catalog("GO_max"), nz)
    worst = max(
        abs(float(imp(x, y)) - min(1.0, 1.0 - x * x - y * y + 2 * y))
        for x, y in ok.pair_points(ok.CheckConfig(grid_resolution=51, random_samples=50))
    )
    print(f"max deviation from the closed form: {worst:.2e}")

    print()
    print("== natural negations ==")
    print("the unary trace x -> I(x, 0) of each implication:")
    for imp in instances[:3]:
        nat = ok.natural_negation(imp)
        values = ", ".join(f"{float(nat(x)):.3f}" for x in (0.0, 0.5, 1.0))
        print(f"{imp.label:<34} [{values}]")

    print()
    print("== crisp classification ==")
    two_valued = ok.make_gon(ok.catalog("O_min"), ok.make_crisp("upper", 0.5))
    print(f"{two_valued.label} classifies as {ok.classify_crisp(two_valued)}")
    smooth = ok.make_gon(ok.catalog("GO_max"), nz)
    print(f"{smooth.label} classifies as {ok.classify_crisp(smooth)}")


if __name__ == "__main__":
    main()

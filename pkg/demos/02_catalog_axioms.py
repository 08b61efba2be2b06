"""Run the grid axiom engine over the named connective catalog.

Each entry claims a role (overlap or general overlap). The engine checks
symmetry, boundary conditions, monotonicity, and a continuity heuristic
on the sample grid, and reports the one-directional boundary converses
as informational findings.
"""

import overlapkit as ok

ENTRIES = [
    ("O_mM", {}),
    ("O_DB", {}),
    ("O_P", {"p": 2}),
    ("O_V", {}),
    ("O_min", {}),
    ("GO_max", {}),
    ("GO_TL", {"p": 2}),
    ("GO_PN", {"n": 3}),
    ("GO_GN", {"n": 3}),
]

ROLE_TO_SET = {"overlap": "O", "general_overlap": "GO"}


def main() -> None:
    print("== every entry against its claimed axiom set ==")
    for name, params in ENTRIES:
        f = ok.catalog(name, **params)
        rep = ok.check_axioms(f, ROLE_TO_SET[f.role])
        print(f"{f.label:<12} [{rep.axiom_set}] {'PASS' if rep.passed else 'FAIL'}")

    print()
    print("== the overlap/general-overlap split ==")
    print("general overlaps weaken the zero condition to one direction,")
    print("so checking them against the full overlap axioms must fail O2:")
    for name in ("GO_max", "GO_TL"):
        f = ok.catalog(name, p=2) if name == "GO_TL" else ok.catalog(name)
        o2 = ok.check_axioms(f, "O").check("O2")
        x, y = o2.witness
        print(f"{f.label:<12} O2 witness ({x:.2f}, {y:.2f}): value {float(f(x, y))}")

    print()
    print("== a genuine discontinuity the heuristic can see ==")
    print("the sum-gated product jumps along the plane where the")
    print("coordinates sum to one; at arity 2 the default grid is fine")
    print("enough to expose it:")
    rep = ok.check_axioms(ok.catalog("GO_PN", n=2), "GO")
    print(rep.summary())

    print()
    print("== neutral elements ==")
    for f in (ok.catalog("O_min"), ok.catalog("O_mM"), ok.catalog("GO_max"),
              ok.piecewise_neutral_go(0.5)):
        print(f"{f.label:<18} neutral: {ok.find_neutral(f)}")

    print()
    print("== idempotency and the minimum characterization ==")
    idem = ok.idempotent_go(1, 2)
    print(f"{idem.label} idempotent: {bool(ok.check_idempotent(idem))}, "
          f"neutral: {ok.find_neutral(idem)}")
    print("a connective with neutral 1 that is idempotent can only be the")
    print("minimum; the example above dodges that by having no neutral.")


if __name__ == "__main__":
    main()

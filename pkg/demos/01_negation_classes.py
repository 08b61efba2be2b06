"""Tour of the fuzzy negation constructors and the numeric classifier.

Builds one representative of each negation class, prints the class
matrix the classifier reports, and shows De Morgan duals in action.
"""

import overlapkit as ok


def banner(text: str) -> None:
    print()
    print(f"== {text} ==")


def main() -> None:
    banner("constructors")
    catalog = [
        ok.make_standard(),
        ok.make_power_strict(2),
        ok.make_crisp("lower", 0.5),
        ok.make_crisp("upper", 0.5),
        ok.make_bottom(),
        ok.make_top(),
    ]
    for n in catalog:
        values = ", ".join(f"N({x:.2f})={float(n(x)):.4f}" for x in (0.0, 0.25, 0.5, 0.75, 1.0))
        print(f"{n.label:<18} {values}")

    banner("classification matrix")
    print(f"{'label':<18} {'negation':<9} {'strict':<7} {'strong':<7} {'crisp':<6} frontier")
    for n in catalog:
        cls = ok.classify(n)
        print(
            f"{n.label:<18} {str(cls.is_negation):<9} {str(cls.is_strict):<7} "
            f"{str(cls.is_strong):<7} {str(cls.is_crisp):<6} {cls.is_frontier}"
        )

    banner("why 1 - x^2 is strict but not strong")
    n2 = ok.make_power_strict(2)
    print(f"N(N(0.5)) = {float(n2(n2(0.5))):.4f}, involution would need 0.5")

    banner("duals")
    product = ok.catalog("O_P", p=1)
    psum = ok.dual(product, ok.make_standard())
    print(f"standard dual of the product: {psum.label}")
    print(f"  at (0.5, 0.5): {float(psum(0.5, 0.5)):.4f} (probabilistic sum gives 0.75)")
    mx = ok.dual(ok.catalog("O_min"), ok.make_standard())
    print(f"standard dual of the minimum at (0.2, 0.7): {float(mx(0.2, 0.7)):.4f}")

    banner("numeric inverse of a strict negation")
    inv = ok.inverse_negation(n2)
    for y in (0.19, 0.5, 0.99):
        x = float(inv(y))
        print(f"inv({y}) = {x:.6f}, check N(x) = {float(n2(x)):.6f}")


if __name__ == "__main__":
    main()

"""Build the cohomology models and print their Hilbert series.

Every algebra here is a graded-commutative quotient presented by
generators and relations, computed degree by degree with exact
arithmetic.  The printed series are the dimension counts that all
later computations (cup lengths, certificates, the complexity table)
are checked against.
"""

from tcsurf import (arnold_algebra, genus2_B_algebra, punctured_plane_algebra,
                    quotient, so3_mod2_algebra, sphere_mod2_model,
                    surface_cohomology, totaro_algebra)


def show(label, A):
    h = A.hilbert()
    print(f"{label:34s} hilbert {h}   total {sum(h)}")


def main():
    print("Closed surfaces (one algebra per genus):")
    for g in range(4):
        show(f"  H*(Sigma_{g})", quotient(surface_cohomology(g)))

    print("\nConfiguration spaces of the plane (Arnold algebras):")
    for n in range(2, 6):
        show(f"  F(C, {n})", quotient(arnold_algebra(n)))

    print("\nPunctured plane, k extra marked points:")
    for n in range(1, 5):
        for k in (1, 2):
            show(f"  F(C - {k} pts, {n})", quotient(punctured_plane_algebra(n, k)))

    print("\nTorus configuration spaces (quotient of H*(T)^{tensor n}):")
    for n in range(1, 5):
        show(f"  F(T, {n})", totaro_algebra(1, n))

    print("\nGenus-2 pair-ideal quotients B(n):")
    for n in range(1, 4):
        show(f"  B({n})", genus2_B_algebra(n))

    print("\nMod-2 models:")
    for n in range(3, 6):
        show(f"  F(S^2, {n}) mod 2", sphere_mod2_model(n))
    show("  SO(3) config section, mod 2", so3_mod2_algebra())


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print the desk-scale component tables and series.

Covers: connected-component counts of the PGL(n, R) representation spaces
for small n and genus, the extended-linear moduli totals at twist degree 0
and 1, the split-class invariant z0, and the rank-3 Poincare polynomials.
"""

from pglrep.classify import component_count, egl_component_counts, z0
from pglrep.poincare import NotDivisible, pt_sl3, pt_so3


def main() -> None:
    genera = (2, 3, 4)

    print("components of the PGL(n, R) representation space")
    print("  n \\ g " + "".join(f"{g:>12}" for g in genera))
    for n in (2, 3, 4, 5, 6, 8):
        row = "".join(f"{component_count(n, g):>12}" for g in genera)
        print(f"  {n:>5} {row}")

    print()
    print("extended-linear moduli totals (full space / fixed fibre)")
    for g in genera:
        d0 = egl_component_counts(0, g, 4)
        d1 = egl_component_counts(1, g, 4)
        print(
            f"  g={g}: deg 0: {d0.total:>4} / {d0.fibre_total:>4}"
            f"   deg 1: {d1.total:>4} / {d1.fibre_total:>4}"
        )

    print()
    print("split-class second invariant z0 = (g-1) n^2/4 mod 2")
    print("  n \\ g " + "".join(f"{g:>4}" for g in genera))
    for n in (4, 6, 8):
        print(f"  {n:>5} " + "".join(f"{z0(n, g):>4}" for g in genera))

    print()
    print("rank-3 Poincare polynomials (coefficients by ascending degree)")
    for g in (2, 3):
        for w2 in (1, 0):
            try:
                so3 = pt_so3(w2, g)
                sl3 = pt_sl3(w2, g)
            except NotDivisible:
                print(f"  g={g} w2={w2}: stated closed form is not an exact quotient")
                continue
            print(f"  g={g} w2={w2}: so3 {list(so3.coeffs)}")
            print(f"  g={g} w2={w2}: sl3 {list(sl3.coeffs)}")


if __name__ == "__main__":
    main()

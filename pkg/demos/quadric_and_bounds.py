"""Integer computations: the even quadric, cyclic covers and numerical bounds.

Run with:  python3 demos/quadric_and_bounds.py
"""

from alexmod.arith import Poly
from alexmod.coinvariants import group_coinvariants
from alexmod.laurent import ZLaurentModule, cover_homology, power_transform
from alexmod.linalg import IntMatrix
from alexmod.topo import (
    MilnorData,
    TorsionShape,
    milnor_bounds,
    suspension_order_bound,
    suspension_sequence_solve,
    torsion_constraint_check,
)
from alexmod.worked_examples import quadric_rep


def main():
    T = ZLaurentModule.free([[-1]])
    print("quadric module:", T)
    for e in (1, 2, 3):
        print(f"  H_n of the {e}-fold cover:", cover_homology(T, ZLaurentModule.zero(), e))
    print("  coinvariants:", group_coinvariants(quadric_rep(2)).value)

    I5 = ZLaurentModule.free(IntMatrix.identity(5))
    print("trivial rank 5 action, 3-fold cover:", cover_homology(I5, ZLaurentModule.zero(), 3))
    print("Milnor bounds (10, 10, 16):", milnor_bounds(MilnorData(10, 10, 16)))

    t = Poly.t()
    print("(t^2 + t + 1) with ell = 3:", power_transform(t ** 2 + t + 1, 3))
    print("order bound for t + 1, d = 3:", suspension_order_bound([t + 1], 3))
    print("suspension cokernel of diag(1,3):", suspension_sequence_solve(IntMatrix.diagonal([1, 3])))

    for p, d, shape in ((2, 3, [1]), (2, 5, [2, 2, 1]), (7, 14, [3])):
        verdict, reasons = torsion_constraint_check(TorsionShape(p, shape, d))
        print(f"p = {p}, d = {d}, shape {shape}: {verdict}")


if __name__ == "__main__":
    main()

import pytest

from alexmod.arith import Poly
from alexmod.linalg import AbelianGroup, IntMatrix
from alexmod.topo import (
    MilnorData,
    TorsionShape,
    assemble_local_charpoly,
    milnor_bounds,
    suspension_order_bound,
    suspension_sequence_solve,
    torsion_constraint_check,
    variation_complement_homology,
)

t = Poly.t()


def test_milnor_bounds():
    assert milnor_bounds(MilnorData(10, 10, 16)) == (4, 10)
    assert milnor_bounds(MilnorData(7, 3, 7)) == (3, 3)
    assert milnor_bounds(MilnorData(0, 0, 5)) == (0, 0)
    with pytest.raises(ValueError, match="special fiber exceeds total Milnor number"):
        milnor_bounds(MilnorData(9, 1, 8))


@pytest.mark.parametrize("p,d,shape,verdict", [
    (2, 3, [1], "inconsistent"),
    (2, 5, [2, 2, 1], "inconsistent"),
    (7, 14, [3], "no-constraint"),
    (2, 3, [2, 2], "consistent"),
    (2, 5, [1, 1, 1], "consistent"),
])
def test_torsion_constraints(p, d, shape, verdict):
    got, reasons = torsion_constraint_check(TorsionShape(p, shape, d))
    assert got == verdict and reasons


def test_torsion_constraint_errors():
    with pytest.raises(ValueError, match="not prime"):
        torsion_constraint_check(TorsionShape(4, [1], 3))
    with pytest.raises(ValueError):
        TorsionShape(2, [1, 2], 3)


def test_assemble_local_charpoly():
    assert assemble_local_charpoly([], 3) == ((t - 1) ** 3, 3)
    assert assemble_local_charpoly([t + 1], 1) == (t + 1, 0)
    assert assemble_local_charpoly([t - 1] * 10, 16) == ((t - 1) ** 16, 6)
    with pytest.raises(ValueError, match="local data exceeds fiber rank"):
        assemble_local_charpoly([t + 1, t + 1], 1)


def test_suspension_order_bound():
    assert suspension_order_bound([t + 1], 3) == 2
    assert suspension_order_bound([t - 2], 1) == 1
    # direct product over the d-th roots of unity: (t^2+t+1)(1) = 3 and (t^2+t+1)(-1) = 1
    assert suspension_order_bound([t ** 2 + t + 1], 2) == 3
    with pytest.raises(ValueError, match="violated"):
        suspension_order_bound([t - 1], 4)


def test_variation_homology():
    out = variation_complement_homology(IntMatrix([[-2]]), 2, 1)
    assert out[2] == AbelianGroup(0, (2,)) and out[3] == AbelianGroup(0, ())
    out = variation_complement_homology(IntMatrix.diagonal([1, 3]), 2, 2)
    assert out[2] == AbelianGroup(0, (3,)) and out[3] == AbelianGroup(0, ())
    out = variation_complement_homology(IntMatrix([], 3), 2, 3)
    assert out[2] == AbelianGroup(0, ()) and out[3] == AbelianGroup(3, ())
    out = variation_complement_homology(IntMatrix([[1, 0]]), 1, 2, r_components=1)
    assert out[1] == AbelianGroup(1, ()) and out[2] == AbelianGroup(1, ())
    with pytest.raises(ValueError, match="not free"):
        variation_complement_homology(IntMatrix([[2]]), 1, 1, r_components=1)


def test_suspension_sequence():
    assert suspension_sequence_solve(IntMatrix.diagonal([1, 3])) == AbelianGroup(0, (3,))
    with pytest.raises(ValueError, match="sequence not exact on the left"):
        suspension_sequence_solve(IntMatrix([[1, 2], [2, 4]]))


def test_milnor_monotonicity(rng):
    for _ in range(100):
        mux, mu0, extra = rng.randint(0, 20), rng.randint(0, 20), rng.randint(0, 20)
        lo, hi = milnor_bounds(MilnorData(mux, mu0, mux + extra))
        assert lo <= hi
        lo2, _ = milnor_bounds(MilnorData(mux + 1, mu0, mux + extra + 1))
        assert lo2 >= lo - 1
        lo3, _ = milnor_bounds(MilnorData(mux, mu0, mux + extra + 1))
        assert lo3 <= lo
        if extra:
            lo4, _ = milnor_bounds(MilnorData(mux + 1, mu0, mux + extra))
            assert lo4 >= lo


def test_constraint_depends_only_on_gcds(rng):
    from math import gcd

    primes = [2, 3, 5, 7, 11, 13]
    seen = {}
    for _ in range(300):
        p, d = rng.choice(primes), rng.randint(1, 60)
        shape = tuple(sorted((rng.randint(1, 3) for _ in range(rng.randint(1, 4))), reverse=True))
        key = (gcd(p - 1, d) == 1, gcd((p - 1) * p * (p + 1), d) == 1, shape)
        verdict, _ = torsion_constraint_check(TorsionShape(p, shape, d))
        assert seen.setdefault(key, verdict) == verdict


def test_suspension_bound_matches_direct_evaluation(rng):
    from alexmod.arith import CyclotomicField
    from conftest import rand_poly

    for d in range(1, 13):
        K = CyclotomicField(d)
        for _ in range(3):
            P = rand_poly(rng, rng.randint(1, 3), lo=-3, hi=3)
            prod = K.one
            for k in range(1, d + 1):
                prod = prod * P.change_field(K)(K.zeta ** k)
            if not prod:
                continue
            assert suspension_order_bound([P], d) == abs(int(prod.to_fraction()))


def test_variation_rank_bookkeeping(rng):
    for _ in range(50):
        b = rng.randint(1, 4)
        rows = rng.randint(0, b)
        V = IntMatrix([[rng.randint(-3, 3) for _ in range(b)] for _ in range(rows)], b)
        out = variation_complement_homology(V, 2, b)
        rk = V.rank() if rows else 0
        assert out[3] == AbelianGroup(b - rk, ())
        assert out[2].rank == rows - rk

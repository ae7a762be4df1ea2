"""Cross-checks against sympy as an independent oracle (rational cases only)."""

import pytest

sympy = pytest.importorskip("sympy")

from sympy import Matrix, Poly as SPoly, ZZ, factor_list, symbols  # noqa: E402
from sympy.matrices.normalforms import smith_normal_form  # noqa: E402

from alexmod.arith import Poly, factorize  # noqa: E402
from alexmod.linalg import IntMatrix, charpoly, smith_normal_form_Z  # noqa: E402

from conftest import rand_invertible  # noqa: E402

x = symbols("t")


def _coeffs(P):
    return [sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) for c in reversed(P.coeffs)]


def test_charpoly_and_det(rng):
    for _ in range(40):
        A = rand_invertible(rng, rng.randint(1, 5))
        S = Matrix([[int(A[i, j].to_fraction()) for j in range(A.ncols)] for i in range(A.nrows)])
        assert _coeffs(charpoly(A)) == SPoly(S.charpoly(x).as_expr(), x).all_coeffs()
        assert A.det() == int(S.det())


def test_smith_diagonal(rng):
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-7, 7) for _ in range(n)] for _ in range(n)]
        ours = [abs(d) for d in smith_normal_form_Z(IntMatrix(rows)).diagonal]
        theirs = smith_normal_form(Matrix(rows), domain=ZZ)
        assert ours == [abs(theirs[i, i]) for i in range(n)]


def test_rational_factorization(rng):
    t = Poly.t()
    for _ in range(40):
        P = Poly.one()
        for _ in range(rng.randint(1, 4)):
            P = P * rng.choice([t - 1, t + 1, t ** 2 + t + 1, t - 3, t ** 2 + 1, t ** 4 + 1])
        rep = factorize(P)
        assert rep.complete
        ours = sorted((_coeffs(f), k) for f, k in rep.resolved)
        _, fl = factor_list(SPoly(_coeffs(P), x))
        theirs = sorted((f.monic().all_coeffs(), k) for f, k in fl)
        assert ours == theirs

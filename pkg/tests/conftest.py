import random
from fractions import Fraction

import pytest

from alexmod.arith import QQ, CyclotomicField, Poly
from alexmod.linalg import FieldMatrix, IntMatrix
from alexmod.monodromy import MonodromyRep


def rand_unimodular(rng, n, steps=None):
    """Random element of GL_n(Z) as a product of elementary matrices."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.8:
            c = rng.choice([-2, -1, 1, 2])
            M[i] = [x + c * y for x, y in zip(M[i], M[j])]
        else:
            k = rng.randrange(n)
            M[k] = [-x for x in M[k]]
        if n > 1 and rng.random() < 0.2:
            M[i], M[j] = M[j], M[i]
    return IntMatrix(M)


def rand_invertible(rng, n, field=QQ, lo=-3, hi=3):
    while True:
        rows = [[_rand_entry(rng, field, lo, hi) for _ in range(n)] for _ in range(n)]
        A = FieldMatrix(rows, field)
        if A.det():
            return A


def _rand_entry(rng, field, lo, hi):
    if field.degree == 1:
        return field(rng.randint(lo, hi))
    return field.from_coeffs([Fraction(rng.randint(lo, hi)) for _ in range(field.degree)])


def rand_poly(rng, deg, field=QQ, lo=-5, hi=5, monic=True):
    coeffs = [_rand_entry(rng, field, lo, hi) for _ in range(deg)]
    lead = field.one if monic else _rand_entry(rng, field, 1, hi)
    return Poly(coeffs + [lead], field)


def block_jordan(rng, n, field=QQ, eigen=(1, -1, 2)):
    """A random matrix in Jordan-like form with repeated eigenvalues."""
    rows = [[field.zero] * n for _ in range(n)]
    diag = sorted(rng.choice(eigen) for _ in range(n))
    for i in range(n):
        rows[i][i] = field(diag[i])
    # superdiagonal ones only inside runs of equal eigenvalues
    for i in range(n - 1):
        if diag[i] == diag[i + 1]:
            rows[i][i + 1] = field(rng.choice([0, 1]))
    return FieldMatrix(rows, field)


def rand_rep(rng, integral=False, max_rank=5, max_g=3):
    """Random representation with enough structure to make M(f) nonzero often."""
    m = rng.randint(1, max_rank)
    g = rng.randint(1, max_g)
    kind = rng.choice(["unipotent", "diagonal", "mixed", "generic"])
    mats = []
    for _ in range(g):
        if kind == "generic" and not integral:
            mats.append(rand_invertible(rng, m))
            continue
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            rows[i][i] = 1 if kind in ("unipotent",) else rng.choice([1, -1])
            for j in range(i + 1, m):
                if rng.random() < (0.5 if kind != "diagonal" else 0.0):
                    rows[i][j] = rng.randint(-2, 2)
        if kind == "generic" and integral:
            U = rand_unimodular(rng, m)
            rows = [list(r) for r in (U @ IntMatrix(rows)).rows]
        mats.append(FieldMatrix(rows, QQ))
    P = rand_unimodular(rng, m).to_field()
    Pinv = P.inverse()
    mats = [P @ A @ Pinv for A in mats]
    labels = [f"b{i + 1}" for i in range(g)]
    return MonodromyRep(
        tuple(mats), tuple(labels), rng.randrange(g), n=rng.choice([1, 2, 3]),
        coefficients="integers" if integral else "field",
    )


@pytest.fixture
def rng():
    return random.Random(20240611)


K3 = CyclotomicField(3)


ACCEPTANCE_LINES = []


def record(criterion, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

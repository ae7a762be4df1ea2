"""Concrete inputs: the two-value family h = f + g over Q(zeta_3) and the
even-dimensional quadric.

In the family, f(x, y) = x + x^2 y^2 + x^2 y^3 has bifurcation values
b1 = -27/16 and 0, and g = u + u^2 v contributes an identity factor,
so the representation of h is that of f with the degree shifted by 2.
The generic fiber homology is 4-dimensional.
"""

from .arith.field import CyclotomicField
from .linalg import FieldMatrix, IntMatrix, inverse
from .monodromy import MonodromyRep

K3 = CyclotomicField(3)
J = K3.zeta  # j = exp(2 pi i / 3)

B1_LABEL = "-27/16"
ZERO_LABEL = "0"


def jordan_forms():
    """Jordan forms of m1, m2 and T_inf for h (as a dict of FieldMatrix)."""
    one = K3.one
    m1 = FieldMatrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], K3)
    m2 = FieldMatrix.diagonal([one, one, J, J ** 2], K3)
    tinf = FieldMatrix([[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], K3)
    return {"m1": m1, "m2": m2, "T_inf": tinf}


def solve_beta_gamma():
    """The unique (beta, gamma) with beta + gamma = -1, beta j + gamma j^2 = 2."""
    A = [[K3.one, K3.one], [J, J ** 2]]
    Ainv = inverse(A, K3)
    rhs = [K3(-1), K3(2)]
    beta = Ainv[0][0] * rhs[0] + Ainv[0][1] * rhs[1]
    gamma = Ainv[1][0] * rhs[0] + Ainv[1][1] * rhs[1]
    return beta, gamma


def family_matrices(a=0, alpha=0, b=1, c=1, beta=None, gamma=None):
    """m1, m2 in the special basis e1..e4 for arbitrary parameters."""
    if beta is None or gamma is None:
        beta, gamma = solve_beta_gamma()
    a, alpha, b, c = (K3(x) for x in (a, alpha, b, c))
    m1 = FieldMatrix([[1, a, b, c], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], K3)
    m2 = FieldMatrix([[1, 0, 0, 0], [alpha, 1, 0, 0], [beta, 0, J, 0], [gamma, 0, 0, J ** 2]], K3)
    return m1, m2


def h_family_rep(a=0, case=2, distinguished=ZERO_LABEL, **overrides):
    """Representation of h for the two admissible cases.

    case 1: alpha = 1, which forces a = 0 (a * alpha = 0);
    case 2: alpha = 0 with a free.
    ``overrides`` may replace b or c (used to build corrupted inputs).
    """
    if case not in (1, 2):
        raise ValueError("case must be 1 or 2")
    a = K3(a)
    alpha = 1 if case == 1 else 0
    if case == 1 and a:
        raise ValueError("a * alpha must vanish: case 1 needs a = 0")
    m1, m2 = family_matrices(a=a, alpha=alpha, b=overrides.get("b", 1), c=overrides.get("c", 1))
    labels = (B1_LABEL, ZERO_LABEL)
    rep = MonodromyRep((m1, m2), labels, labels.index(str(distinguished)), n=3, h_good=True, b_n_F=4)
    return rep


def quadric_rep(n=2):
    """x_0^2 + ... + x_n^2: one critical value, fiber homology Z, T = (-1)^(n+1)."""
    sign = (-1) ** (n + 1)
    return MonodromyRep(
        (IntMatrix([[sign]]).to_field(),), ("0",), 0, n=n, h_good=True, coefficients="integers", b_n_F=1
    )

"""Numerical side formulas: Milnor bounds, p-torsion constraints, local
characteristic polynomials and suspension bookkeeping."""

from dataclasses import dataclass
from math import gcd

from .arith.field import QQ
from .arith.poly import Poly, resultant
from .linalg import AbelianGroup, cokernel_Z

MILNOR_HYPOTHESIS = "f is assumed (topologically) good; for merely h-good f the bound is not claimed"


@dataclass(frozen=True)
class MilnorData:
    mu_X: int
    mu0_X: int
    mu: int

    def __post_init__(self):
        if min(self.mu_X, self.mu0_X, self.mu) < 0:
            raise ValueError("Milnor numbers must be nonnegative")


def milnor_bounds(data):
    """(lower, upper) for dim H_n(M_X); lower is clamped at 0."""
    if data.mu < data.mu_X:
        raise ValueError("special fiber exceeds total Milnor number")
    return max(0, data.mu_X + data.mu0_X - data.mu), data.mu0_X


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class TorsionShape:
    p: int
    exponents: tuple
    d: int

    def __post_init__(self):
        ex = tuple(int(k) for k in self.exponents)
        if any(k < 1 for k in ex) or any(a < b for a, b in zip(ex, ex[1:])):
            raise ValueError("exponents must be positive and nonincreasing")
        object.__setattr__(self, "exponents", ex)


def torsion_constraint_check(shape):
    """Verdict 'consistent', 'inconsistent' or 'no-constraint' with reasons.

    The conditions are necessary ones only, so 'consistent' does not
    mean realizable.
    """
    p, d, ks = shape.p, shape.d, shape.exponents
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("d must be positive")
    reasons = []
    triggered = False
    ok = True
    g1 = gcd(p - 1, d)
    if g1 == 1:
        triggered = True
        good = len(ks) >= 2 and ks[0] == ks[1]
        ok &= good
        reasons.append(f"gcd(p-1, d) = 1 forces m >= 2 and k1 = k2: {'holds' if good else 'fails'}")
    g2 = gcd((p - 1) * p * (p + 1), d)
    if g2 == 1:
        triggered = True
        good = len(ks) >= 3 and ks[0] == ks[1] == ks[2]
        ok &= good
        reasons.append(f"gcd((p-1)p(p+1), d) = 1 forces m >= 3 and k1 = k2 = k3: {'holds' if good else 'fails'}")
    if not triggered:
        reasons.append(f"gcd(p-1, d) = {g1} and gcd((p-1)p(p+1), d) = {g2}: no condition applies")
        return "no-constraint", reasons
    return ("consistent" if ok else "inconsistent"), reasons


def assemble_local_charpoly(local_factors, b_n_F):
    """(t - 1)^k * prod Delta_i with k = b_n(F) - sum deg Delta_i; returns (poly, k)."""
    field = local_factors[0].field if local_factors else QQ
    k = b_n_F - sum(P.degree for P in local_factors)
    if k < 0:
        raise ValueError("local data exceeds fiber rank")
    t = Poly.t(field)
    out = (t - 1) ** k
    for P in local_factors:
        out = out * P.monic()
    return out, k


def suspension_order_bound(local_factors, d):
    """|Res(t^d - 1, prod Delta_i)| = |prod_k prod_i Delta_i(alpha^k)|."""
    if d < 1:
        raise ValueError("d must be positive")
    prod = Poly.one(QQ)
    for P in local_factors:
        if not P.is_integral():
            raise ValueError("local factors must have integer coefficients")
        prod = prod * P
    t = Poly.t(QQ)
    r = resultant(t ** d - 1, prod)
    if not r:
        raise ValueError("hypothesis Delta_i(alpha^k) != 0 violated")
    return abs(int(r.to_fraction()))


def variation_complement_homology(V, n, b_n_F, r_components=None):
    """Homology of M_X for h-good f from the variation map V.

    n >= 2: H_0 = Z, H_1 = Z, H_n = coker V, H_(n+1) free of rank b_n(F) - rank V.
    n = 1:  H_1 = coker V + Z, H_2 free of rank b_1(F) - rank V.  H_1 must
            be free of rank r (the number of components of X) when r is given.
    """
    if V.ncols != b_n_F and not (V.nrows == 0 and V.ncols == 0):
        raise ValueError("V must have b_n(F) columns")
    rk = V.rank() if V.nrows and V.ncols else 0
    if rk > min(V.nrows, b_n_F):
        raise ValueError("rank of V exceeds its dimensions")
    coker = cokernel_Z(V) if V.nrows else AbelianGroup(0, ())
    top = AbelianGroup(b_n_F - rk, ())
    if n >= 2:
        return {0: AbelianGroup(1, ()), 1: AbelianGroup(1, ()), n: coker, n + 1: top}
    if n == 1:
        h1 = coker + AbelianGroup(1, ())
        if r_components is not None and (h1.torsion or h1.rank != r_components):
            raise ValueError(f"H_1 = {h1} is not free of rank {r_components}")
        return {0: AbelianGroup(1, ()), 1: h1, 2: top}
    raise ValueError("n must be at least 1")


def suspension_sequence_solve(inclusion):
    """H_(q+1)(M_Y) = coker of the injection H_q(M_X) -> H_q(M_X,d)."""
    if inclusion.ncols and inclusion.rank() < inclusion.ncols:
        raise ValueError("sequence not exact on the left")
    if inclusion.ncols == 0:
        return AbelianGroup(inclusion.nrows, ())
    return cokernel_Z(inclusion)


__all__ = [
    "MILNOR_HYPOTHESIS",
    "MilnorData",
    "TorsionShape",
    "assemble_local_charpoly",
    "milnor_bounds",
    "suspension_order_bound",
    "suspension_sequence_solve",
    "torsion_constraint_check",
    "variation_complement_homology",
]

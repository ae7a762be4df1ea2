"""Best-effort factorization over Q(zeta_N), cyclotomic factors first.

Full factorization over number fields is not attempted.  Each squarefree
part is split by roots of unity and rational roots, by gcds with the
cyclotomic polynomials Phi_k (k <= bound) and by a low-degree closure;
whatever is left is reported as unresolved.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .field import CyclotomicField, euler_phi, lcm
from .poly import Poly, cyclotomic_poly, poly_gcd

DEFAULT_CYCLOTOMIC_BOUND = 120


@dataclass(frozen=True)
class FactorizationReport:
    resolved: tuple  # ((irreducible monic Poly, multiplicity), ...)
    unresolved: tuple  # ((monic Poly, multiplicity), ...)
    complete: bool
    # order k of the roots for resolved factors dividing some Phi_k
    root_orders: dict = dc_field(default_factory=dict, compare=False)

    def product(self, field):
        acc = Poly.one(field)
        for p, m in self.resolved + self.unresolved:
            acc = acc * p ** m
        return acc

    def cyclotomic_order(self, p):
        return self.root_orders.get(p)


def squarefree_decomposition(p):
    """Yun's algorithm: list of (s_i, i) with p = lc * prod s_i^i, s_i squarefree and coprime."""
    p = p.monic()
    if p.degree <= 0:
        return []
    out = []
    a = poly_gcd(p, p.derivative())
    b = p.exact_div(a)
    c = p.derivative().exact_div(a) if a.degree >= 0 else p.derivative()
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def _divisors(n, limit=10**12):
    n = abs(n)
    if n == 0 or n > limit:
        return None
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _rational_roots(p):
    """All rational roots of a polynomial with rational coefficients, or None if too large."""
    coeffs = [c.to_fraction() for c in p.coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
    ints = ints[low:]
    if len(ints) == 1:
        return roots
    num_divs = _divisors(ints[0])
    den_divs = _divisors(ints[-1])
    if num_divs is None or den_divs is None:
        return None
    cands = set()
    for a in num_divs:
        for b in den_divs:
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    for r in sorted(cands):
        val = 0
        for c in reversed(ints):
            val = val * r + c
        if val == 0:
            roots.append(r)
    return roots


def _factor_degree_over(k, field):
    """Degree of the irreducible factors of Phi_k over Q(zeta_N)."""
    return euler_phi(lcm(k, field.order)) // field.degree


@lru_cache(maxsize=None)
def cyclotomic_factors_over(k, order):
    """Irreducible factors of Phi_k over Q(zeta_order), via Galois orbits of zeta_k."""
    K = CyclotomicField(order)
    if K.degree == 1:
        return (cyclotomic_poly(k, K),)
    L_order = lcm(k, order)
    L = CyclotomicField(L_order)
    step = L_order // k
    seen = set()
    factors = []
    # Gal(Q(zeta_L)/Q(zeta_N)) = {u mod L : u = 1 mod N}
    group = [u for u in range(1, L_order + 1) if gcd(u, L_order) == 1 and (u - 1) % order == 0]
    for a in range(1, k + 1):
        if gcd(a, k) != 1 or a in seen:
            continue
        orbit = sorted({(a * u) % k for u in group})
        seen.update(orbit)
        poly = Poly.one(L)
        for b in orbit:
            poly = poly * Poly.linear(L.zeta_power(b * step), L)
        coeffs = tuple(K.restrict(c, L) for c in poly.coeffs)
        factors.append(Poly(coeffs, K))
    return tuple(sorted(factors))


def _is_square_in_Q(q):
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _split_squarefree(s, bound):
    """Split a squarefree monic polynomial.

    Returns (resolved, unresolved, root_orders) where resolved are
    certified irreducible.
    """
    K = s.field
    resolved = []
    root_orders = {}
    rest = s

    # (a) roots of unity lying in K
    if rest.degree >= 1:
        for k, r in K.elements_of_unity():
            if rest.degree < 1:
                break
            if not rest(r):
                lin = Poly.linear(r, K)
                rest = rest.exact_div(lin)
                resolved.append(lin)
                root_orders[lin] = k

    # rational roots
    if rest.degree >= 1 and rest.has_rational_coeffs():
        roots = _rational_roots(rest)
        if roots is not None:
            for r in roots:
                lin = Poly.linear(K.from_rational(r), K)
                if lin.divides(rest):
                    rest = rest.exact_div(lin)
                    resolved.append(lin)
            rational_roots_exhausted = True
        else:
            rational_roots_exhausted = False
    else:
        rational_roots_exhausted = False

    # (b) cyclotomic factors of higher degree over K
    w = K.roots_of_unity_order
    for k in range(1, bound + 1):
        if rest.degree < 2:
            break
        if w % k == 0:
            continue
        dk = _factor_degree_over(k, K)
        if dk > rest.degree:
            continue
        phi = cyclotomic_poly(k, K)
        g = poly_gcd(rest, phi)
        if g.degree <= 0:
            continue
        for fac in cyclotomic_factors_over(k, K.order):
            if fac.divides(g):
                rest = rest.exact_div(fac)
                resolved.append(fac)
                root_orders[fac] = k

    # (c) low-degree closure
    unresolved = []
    if rest.degree == 1:
        resolved.append(rest)
    elif rest.degree in (2, 3) and K.is_rational and rational_roots_exhausted:
        # no rational root left, so no linear factor
        resolved.append(rest)
    elif rest.degree == 2 and not K.is_rational:
        b, c = rest[1], rest[0]
        disc = b * b - 4 * c
        if not _is_square_in_Q(disc.norm()):
            resolved.append(rest)
        else:
            unresolved.append(rest)
    elif rest.degree >= 2:
        unresolved.append(rest)
    return resolved, unresolved, root_orders


def factorize(p, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
    """Factor a nonzero polynomial into monic pieces.

    The product of the reported factors (with multiplicity) equals the
    monic normalization of ``p``; ``complete`` is False if any piece
    could not be certified irreducible.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    resolved = []
    unresolved = []
    root_orders = {}
    for s, mult in squarefree_decomposition(p):
        res, unres, orders = _split_squarefree(s, cyclotomic_bound)
        resolved += [(f, mult) for f in res]
        unresolved += [(f, mult) for f in unres]
        root_orders.update(orders)
    resolved.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
    unresolved.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
    return FactorizationReport(tuple(resolved), tuple(unresolved), not unresolved, root_orders)


def is_irreducible(p, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
    """True / False when decidable by the strategy, None otherwise."""
    if p.degree <= 0:
        return False
    rep = factorize(p, cyclotomic_bound)
    pieces = rep.resolved + rep.unresolved
    if len(pieces) > 1 or pieces[0][1] > 1:
        return False
    return True if rep.complete else None

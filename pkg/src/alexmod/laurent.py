"""Torsion modules over Lambda = K[t, t^-1] and lattices with a t-action.

A module over Lambda_K is stored by its invariant factors only, so
nothing here needs a factorization except rendering and K(M, p).
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .arith.factor import DEFAULT_CYCLOTOMIC_BOUND, factorize, is_irreducible
from .arith.field import QQ, FieldElement
from .arith.poly import Poly, interpolate, poly_gcd, resultant
from .linalg import (
    AbelianGroup,
    FieldMatrix,
    IntMatrix,
    cokernel_Z,
    smith_normal_form_poly,
)

LAMBDA = "Λ"


@dataclass(frozen=True)
class LaurentModule:
    field: object
    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        chain = tuple(self.invariant_factors)
        for d in chain:
            if d.degree < 1 or not d.is_monic():
                raise ValueError(f"invariant factor {d} must be monic and nonconstant")
            if not d[0]:
                raise ValueError(f"t divides {d}; t is a unit in the Laurent ring")
        for a, b in zip(chain, chain[1:]):
            if not a.divides(b):
                raise ValueError(f"{a} does not divide {b}")
        object.__setattr__(self, "invariant_factors", chain)

    @classmethod
    def zero(cls, field=QQ):
        return cls(field, 0, ())

    @classmethod
    def from_cyclic(cls, orders, field=None, free_rank=0):
        """Module sum Lambda/(o_i) for arbitrary nonzero orders o_i, canonicalized."""
        orders = [o for o in orders]
        if field is None:
            field = orders[0].field if orders else QQ
        orders = [o.change_field(field) for o in orders]
        if any(o.is_zero() for o in orders):
            raise ValueError("use free_rank for free summands")
        n = len(orders)
        if n == 0:
            return cls(field, free_rank, ())
        diag = [[orders[i] if i == j else Poly.zero(field) for j in range(n)] for i in range(n)]
        chain = smith_normal_form_poly(diag, field, drop_units=True)
        return cls(field, free_rank, tuple(_strip_t(d) for d in chain if _strip_t(d).degree > 0))

    def is_torsion(self):
        return self.free_rank == 0

    def is_zero(self):
        return self.free_rank == 0 and not self.invariant_factors

    def dimension(self):
        """K-dimension of the torsion part."""
        return sum(d.degree for d in self.invariant_factors)

    def change_field(self, field):
        return LaurentModule(field, self.free_rank, tuple(d.change_field(field) for d in self.invariant_factors))

    def elementary_divisors(self, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
        """Sorted list of (base, exponent) pairs, one per cyclic summand.

        Bases are irreducible when the factorization is complete; any
        unresolved piece is kept as a squarefree block coprime to the rest.
        """
        return _elementary(self.invariant_factors, cyclotomic_bound)

    def summands(self, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
        return [(str(p), k) for p, k in self.elementary_divisors(cyclotomic_bound)]

    def render(self, ring=LAMBDA, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
        parts = []
        if self.free_rank == 1:
            parts.append(ring)
        elif self.free_rank > 1:
            parts.append(f"{ring}^{self.free_rank}")
        for p, k in self.elementary_divisors(cyclotomic_bound):
            parts.append(f"{ring}/({p})" + (f"^{k}" if k > 1 else ""))
        return " ⊕ ".join(parts) if parts else "0"

    def __str__(self):
        return self.render()

    def to_dict(self):
        return {
            "field_order": self.field.order,
            "free_rank": self.free_rank,
            "invariant_factors": [str(d) for d in self.invariant_factors],
            "summands": [{"base": p, "exponent": k} for p, k in self.summands()],
            "text": self.render(),
        }


def _strip_t(d):
    # drop powers of t (a unit) and normalize
    k = 0
    while k < len(d.coeffs) and not d.coeffs[k]:
        k += 1
    if k:
        d = Poly(d.coeffs[k:], d.field)
    return d.monic()


def _coprime_refine(pieces, polys):
    """Split squarefree pieces until each has a single valuation in every poly."""
    pieces = [p for p in pieces if p.degree > 0]
    changed = True
    while changed:
        changed = False
        for d in polys:
            out = []
            for u in pieces:
                rest = d
                split = None
                while True:
                    g = poly_gcd(u, rest)
                    if g.degree <= 0:
                        break
                    if g.degree < u.degree:
                        split = (g, u.exact_div(g))
                        break
                    rest = rest.exact_div(u)
                if split:
                    out.extend(split)
                    changed = True
                else:
                    out.append(u)
            pieces = out
    return pieces


def _valuation(u, d):
    k = 0
    while d.degree >= u.degree and u.divides(d):
        d = d.exact_div(u)
        k += 1
    return k


def _elementary(chain, cyclotomic_bound):
    if not chain:
        return []
    top = chain[-1]
    rep = factorize(top, cyclotomic_bound)
    pieces = [p for p, _ in rep.resolved]
    pieces += _coprime_refine([p for p, _ in rep.unresolved], chain)
    out = []
    for u in pieces:
        for d in chain:
            k = _valuation(u, d)
            if k:
                out.append((u, k))
    out.sort(key=lambda pk: (pk[0].sort_key(), pk[1]))
    return out


@dataclass(frozen=True)
class TorsionSequence:
    prime: Poly
    exponents: tuple

    def __str__(self):
        return f"K(M, {self.prime}) = {self.exponents}"


def module_from_automorphism(T):
    """Lambda-module (K^m, t acting by T): invariant factors of tI - T."""
    if not isinstance(T, FieldMatrix):
        T = T.to_field()
    if not T.is_square():
        raise ValueError("matrix is not square")
    if T.nrows == 0:
        return LaurentModule.zero(T.field)
    if not T.det():
        raise ValueError("not an automorphism")
    field = T.field
    t = Poly.t(field)
    n = T.nrows
    M = [[(t - T[i, j]) if i == j else Poly.constant(-T[i, j], field) for j in range(n)] for i in range(n)]
    chain = smith_normal_form_poly(M, field, drop_units=True)
    return LaurentModule(field, 0, tuple(chain))


def alexander_polynomial(M):
    acc = Poly.one(M.field)
    for d in M.invariant_factors:
        acc = acc * d
    return acc


def p_torsion_sequence(M, p, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
    """K(M, p): exponents of p in d_a, d_(a-1), ..., zeros dropped."""
    p = p.change_field(M.field) if p.field is not M.field else p
    p = p.monic()
    if p.degree < 1:
        raise ValueError("p must be nonconstant")
    if p == Poly.t(M.field):
        raise ValueError("t is a unit in the Laurent ring")
    if is_irreducible(p, cyclotomic_bound) is False:
        raise ValueError(f"{p} is reducible")
    exps = []
    for d in reversed(M.invariant_factors):
        k = _valuation(p, d)
        if k == 0:
            break
        exps.append(k)
    return TorsionSequence(p, tuple(exps))


def dominance_check(M, N):
    """True iff K(M, p) >= K(N, p) for every prime p.

    Factorization free: with chains d_1|...|d_a and e_1|...|e_b this is
    b <= a and e_(b-i) | d_(a-i) for 0 <= i < b.
    """
    d, e = M.invariant_factors, N.invariant_factors
    if N.field is not M.field:
        if M.field.order % N.field.order == 0:
            e = tuple(x.change_field(M.field) for x in e)
        else:
            d = tuple(x.change_field(N.field) for x in d)
    a, b = len(d), len(e)
    if b > a:
        return False
    return all(e[b - 1 - i].divides(d[a - 1 - i]) for i in range(b))


def power_transform(P, ell):
    """P^(ell) = prod (t - a^ell)^(n_a), via Res_x(P(x), t - x^ell)."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    if ell < 0:
        raise ValueError("ell must be a natural number")
    P = P.monic()
    field = P.field
    if P.degree >= 1 and not P[0]:
        raise ValueError("P(0) = 0: t is excluded as a torsion prime")
    n = P.degree
    t = Poly.t(field)
    if ell == 0:
        return (t - 1) ** n
    if ell == 1 or n == 0:
        return P
    xl = Poly.t(field) ** ell
    # the resultant is a polynomial of degree n in t; sample n+1 points
    points = []
    for c in range(n + 1):
        points.append((field(c), resultant(P, Poly.constant(field(c), field) - xl)))
    return interpolate(points, field).monic()


def torsion_order_at_one(delta):
    """|Delta(1)| or the string "infinite" when Delta(1) = 0."""
    if not delta.is_integral():
        raise ValueError("expected a polynomial with integer coefficients")
    v = int(delta(delta.field.one).coeffs[0])
    return abs(v) if v else "infinite"


def count_summands_at(M, a):
    """N(a): number of invariant factors divisible by t - a."""
    count = 0
    for d in M.invariant_factors:
        q, x = d, a
        if isinstance(a, FieldElement) and a.field is not d.field and not a.is_rational():
            q = d.change_field(a.field)
        if not q(x):
            count += 1
    return count


def local_system_dims(torsion_by_degree, a, n, euler_MX):
    """dim H_k(M_X, L_a) for k = 0..n+1 from the Alexander modules.

    ``torsion_by_degree`` maps k to the module H_k(F); missing degrees
    are zero (so H_0 must be given explicitly when it matters).
    """
    if not a:
        raise ValueError("a must be nonzero")
    for k, M in torsion_by_degree.items():
        if k <= n and not M.is_torsion():
            raise ValueError(f"H_{k} is not torsion")
    N = {k: count_summands_at(M, a) for k, M in torsion_by_degree.items() if k <= n}
    dims = {}
    for k in range(n + 1):
        dims[k] = N.get(k, 0) + N.get(k - 1, 0)
    dims[n + 1] = N.get(n, 0) + abs(euler_MX)
    return dims


def roots_of_unity_audit(M, cyclotomic_bound=DEFAULT_CYCLOTOMIC_BOUND):
    """Factors of Delta(M) not certified as cyclotomic."""
    if not M.invariant_factors:
        return []
    rep = factorize(alexander_polynomial(M), cyclotomic_bound)
    bad = [(p, k) for p, k in rep.resolved if rep.cyclotomic_order(p) is None]
    bad += list(rep.unresolved)
    return bad


# ---------------------------------------------------------------------------
# Z-lattices with an automorphism


@dataclass(frozen=True)
class ZLaurentModule:
    """Z^m / R with t acting through an integer matrix T.

    R (``relations``) must be T-stable; it is empty for the free
    lattices that come out of fiber homology.
    """

    action: IntMatrix
    relations: tuple = ()

    def __post_init__(self):
        T = self.action
        if T.nrows != T.ncols:
            raise ValueError("action must be square")
        rel = tuple(tuple(int(x) for x in r) for r in self.relations)
        object.__setattr__(self, "relations", rel)
        if not rel and T.nrows and abs(T.det()) != 1:
            raise ValueError("t must act by an automorphism of the lattice (det = +-1)")

    @classmethod
    def free(cls, matrix):
        return cls(matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix))

    @classmethod
    def zero(cls):
        return cls(IntMatrix([], 0))

    @property
    def lattice_rank(self):
        return self.action.nrows

    def is_free(self):
        return not self.relations

    def underlying_group(self):
        m = self.lattice_rank
        if not self.relations:
            return AbelianGroup(m, ())
        cols = IntMatrix([list(c) for c in zip(*self.relations)], len(self.relations))
        return cokernel_Z(cols)

    def over_field(self, field=QQ):
        return module_from_automorphism(self.action.to_field(field))

    def cyclic_generator(self, search=2):
        """A vector v with v, Tv, ..., T^(m-1) v a Z-basis, if one is found."""
        m = self.lattice_rank
        if m == 0 or self.relations:
            return None
        T = self.action
        for v in iproduct(range(-search, search + 1), repeat=m):
            if not any(v):
                continue
            cols = [tuple(v)]
            for _ in range(m - 1):
                cols.append(T @ cols[-1])
            B = IntMatrix([list(r) for r in zip(*cols)], m)
            if abs(B.det()) == 1:
                return tuple(v)
        return None

    def render(self):
        m = self.lattice_rank
        if m == 0 and not self.relations:
            return "0"
        if self.relations:
            return f"{self.underlying_group()} with t-action {list(map(list, self.action.rows))}"
        if self.cyclic_generator() is not None:
            chi = self.over_field().invariant_factors
            return f"{LAMBDA}_ℤ/({chi[-1]})"
        return f"ℤ^{m} with t-action {list(map(list, self.action.rows))}"

    def __str__(self):
        return self.render()


def cover_homology(Hk, Hk_minus_1, e):
    """H_k of the e-fold cyclic cover from the Wang-type sequence.

    Returns coker(T^e - I on H_k) + ker(T^e - I on H_(k-1)); the
    extension splits since the kernel is free.
    """
    if e < 1:
        raise ValueError("e must be positive")
    for H in (Hk, Hk_minus_1):
        if not H.is_free():
            raise ValueError("cover_homology expects free lattices")
    out = AbelianGroup(0, ())
    m = Hk.lattice_rank
    if m:
        A = Hk.action ** e - IntMatrix.identity(m)
        out = cokernel_Z(A)
    m1 = Hk_minus_1.lattice_rank
    if m1:
        A1 = Hk_minus_1.action ** e - IntMatrix.identity(m1)
        out = out + AbelianGroup(m1 - A1.rank(), ())
    return out


def companion_matrix(P):
    """Companion matrix of a monic polynomial (last column = -coeffs)."""
    P = P.monic()
    n = P.degree
    field = P.field
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = field.one
    for i in range(n):
        rows[i][n - 1] = -P[i]
    return FieldMatrix(rows, field)

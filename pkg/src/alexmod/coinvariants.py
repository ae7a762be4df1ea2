"""Coinvariants of a monodromy representation.

For the free group G on g generators, H = [G, G] and K_0 = ker(p_0):

    H_G        = H / span{(m_i - 1) v}
    M(f)       = H / W,  W = saturation of the images of ([g_i, g_j] - 1)
    M(f, b)    = M(f) / images of (t_i - 1), i not distinguished

Identity behind W: (h1 h2 - 1) v = (h1 - 1) h2 v + (h2 - 1) v, and the
span of all (h - 1) v, h in H, is G-stable.  Since H is the normal
closure of the basic commutators, W is the smallest G-stable subspace
(or subgroup) containing their images.
"""

from dataclasses import dataclass

from .laurent import (
    ZLaurentModule,
    alexander_polynomial,
    dominance_check,
    module_from_automorphism,
    power_transform,
)
from .linalg import (
    AbelianGroup,
    FieldMatrix,
    IntMatrix,
    charpoly,
    cokernel_Z,
    hermite_normal_form,
    lattice_contains,
    pivots_of,
    reduce_modulo,
    saturate_subgroup,
    span_basis,
)
from .monodromy import FreeWord, commutator, evaluate_word, winding


def _mode(rep, mode):
    if mode is None:
        return "integer" if rep.integral else "field"
    if mode not in ("field", "integer"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "integer" and not rep.integral:
        raise ValueError("integer mode needs a representation over Z")
    return mode


def _images(A, field):
    """Columns of A - I."""
    m = A.nrows
    D = A - FieldMatrix.identity(m, field)
    return D.columns()


def _int(v):
    return tuple(int(x.coeffs[0]) for x in v)


@dataclass(frozen=True)
class MultiActionModule:
    """Quotient of the fiber homology by an invariant subspace / subgroup,
    with the commuting actions induced by the generators."""

    mode: str
    field: object
    ambient: int
    sub_basis: tuple  # RREF rows (field) or Hermite rows (integer)
    actions: tuple  # ambient generator matrices (FieldMatrix)
    labels: tuple

    # -- quotient coordinates -------------------------------------------
    def _rational_sub(self):
        if self.mode == "field":
            return list(self.sub_basis)
        return span_basis([[self.field(x) for x in r] for r in self.sub_basis], self.field, self.ambient)

    def quotient_action(self, i):
        """Matrix of t_i on the (rational) quotient, basis = non-pivot unit vectors."""
        sub = self._rational_sub()
        piv = pivots_of(sub)
        free = [c for c in range(self.ambient) if c not in set(piv)]
        A = self.actions[i]
        cols = []
        for c in free:
            r = reduce_modulo(A.column(c), sub, piv)
            cols.append([r[k] for k in free])
        if not cols:
            return FieldMatrix([], self.field)
        return FieldMatrix.from_columns(cols, self.field)

    @property
    def dimension(self):
        """Dimension over K (field mode) or rank of the quotient group (integer mode)."""
        return self.ambient - len(self._rational_sub())

    @property
    def group(self):
        if self.mode != "integer":
            raise AttributeError("group is only defined in integer mode")
        if not self.sub_basis:
            return AbelianGroup(self.ambient, ())
        cols = IntMatrix([list(c) for c in zip(*self.sub_basis)], len(self.sub_basis))
        return cokernel_Z(cols)

    def contains(self, v):
        if self.mode == "integer":
            return lattice_contains(self.sub_basis, _int(v))
        sub = list(self.sub_basis)
        return not any(reduce_modulo(v, sub, pivots_of(sub)))

    def acts_trivially(self, i):
        return all(self.contains(v) for v in _images(self.actions[i], self.field))

    def commutes(self):
        """Check that the induced actions pairwise commute on the quotient."""
        for i in range(len(self.actions)):
            for j in range(i + 1, len(self.actions)):
                A, B = self.actions[i], self.actions[j]
                D = A @ B - B @ A
                if not all(self.contains(v) for v in D.columns()):
                    return False
        return True

    def collapse(self, indices):
        """Further quotient by the images of (t_i - 1), i in indices."""
        gens = list(self.sub_basis)
        for i in indices:
            cols = _images(self.actions[i], self.field)
            gens += [_int(v) for v in cols] if self.mode == "integer" else cols
        sub = saturate_subgroup(gens, self._operators(), self.mode, self.field)
        return MultiActionModule(self.mode, self.field, self.ambient, tuple(sub), self.actions, self.labels)

    def _operators(self):
        if self.mode == "integer":
            return [A.to_int() for A in self.actions]
        return list(self.actions)

    def is_zero(self):
        if self.mode == "integer":
            return self.group.is_trivial()
        return self.dimension == 0

    def render(self):
        g = len(self.actions)
        ring = f"Λ_{g}" if self.mode == "field" else f"Λ_ℤ,{g}"
        if self.is_zero():
            return "0"
        trivial = all(self.acts_trivially(i) for i in range(g))
        if self.mode == "integer":
            grp = str(self.group)
            if trivial:
                return f"{grp} with trivial ℤ^{g}-action"
            return f"{grp} with ℤ^{g}-action"
        d = self.dimension
        scalars = []
        for i in range(g):
            Q = self.quotient_action(i)
            c = Q[0, 0]
            if Q != FieldMatrix.identity(d, self.field).scale(c):
                scalars = None
                break
            scalars.append(c)
        if scalars is not None:
            rel = ",".join(
                f"t{i + 1}-1" if c == 1 else f"t{i + 1}-({c})" for i, c in enumerate(scalars)
            )
            one = f"{ring}/({rel})"
            return " ⊕ ".join([one] * d)
        per = "; ".join(f"t{i + 1}: {module_from_automorphism(self.quotient_action(i))}" for i in range(g))
        return f"K^{d} with commuting actions [{per}]"

    def __str__(self):
        return self.render()

    def to_dict(self):
        out = {"mode": self.mode, "dimension": self.dimension, "text": self.render()}
        if self.mode == "integer":
            out["group"] = self.group.to_dict()
        out["actions"] = [self.quotient_action(i).to_strings() for i in range(len(self.actions))]
        return out


@dataclass(frozen=True)
class CoinvariantsResult:
    mode: str
    value: object  # dimension (int) or AbelianGroup
    witness: tuple  # basis of the relation subspace / subgroup

    def __str__(self):
        return str(self.value) if self.mode == "integer" else f"dimension {self.value}"


def group_coinvariants(rep, mode=None):
    """H_G = H / span{(m_i - 1) v}."""
    mode = _mode(rep, mode)
    field = rep.field
    m = rep.fiber_rank
    cols = [v for A in rep.matrices for v in _images(A, field)]
    if mode == "field":
        W = span_basis(cols, field, m)
        return CoinvariantsResult(mode, m - len(W), tuple(W))
    ints = [_int(v) for v in cols]
    W = hermite_normal_form(ints, m)
    big = IntMatrix([list(r) for r in zip(*ints)], len(ints)) if ints else IntMatrix.zeros(m, 0)
    return CoinvariantsResult(mode, cokernel_Z(big), tuple(W))


def global_alexander_module(rep, mode=None):
    """M(f) = H_H as a module with g commuting actions."""
    mode = _mode(rep, mode)
    field = rep.field
    g = rep.g
    gens = []
    for i in range(g):
        for j in range(i + 1, g):
            C = evaluate_word(rep, commutator(FreeWord.generator(i), FreeWord.generator(j)))
            cols = _images(C, field)
            gens += [_int(v) for v in cols] if mode == "integer" else cols
    ops = [A.to_int() for A in rep.matrices] if mode == "integer" else list(rep.matrices)
    if mode == "field" and not gens:
        sub = []
    else:
        sub = saturate_subgroup(gens, ops, mode, field) if gens else []
    M = MultiActionModule(mode, field, rep.fiber_rank, tuple(sub), rep.matrices, rep.labels)
    if not M.commutes():
        raise ArithmeticError("induced actions do not commute; saturation failed")
    return M


@dataclass(frozen=True)
class LocalModuleResult:
    module: object  # LaurentModule (field) or ZLaurentModule (integer)
    induced_t: FieldMatrix  # class of the distinguished loop on the rational quotient
    quotient: MultiActionModule
    label: str

    @property
    def rational_module(self):
        return module_from_automorphism(self.induced_t)

    def __str__(self):
        return str(self.module)


def local_alexander_module(rep, mode=None, global_module=None):
    """M(f, b) for the distinguished value b, computed from M(f)."""
    mode = _mode(rep, mode)
    Mf = global_module or global_alexander_module(rep, mode)
    d = rep.distinguished
    Q = Mf.collapse([i for i in range(rep.g) if i != d])
    T = Q.quotient_action(d)
    if mode == "field":
        module = module_from_automorphism(T)
    else:
        module = ZLaurentModule(rep.matrices[d].to_int(), tuple(Q.sub_basis))
    return LocalModuleResult(module, T, Q, rep.labels[d])


def coinvariants_agree(rep, mode=None):
    """M(f) collapsed by every (t_i - 1) equals H_G."""
    mode = _mode(rep, mode)
    Mf = global_alexander_module(rep, mode)
    full = Mf.collapse(range(rep.g))
    HG = group_coinvariants(rep, mode)
    if mode == "integer":
        return full.group == HG.value
    return full.dimension == HG.value


def total_space_homology(rep, mode=None):
    """Homology of the total space E over the regular values.

    n > 1: H_1 = Z^g, H_n = H_G, H_(n+1) = ker(H^g -> H, (v_i) -> sum (m_i - 1) v_i).
    n = 1: H_2 is that kernel and H_1 sits in 0 -> H_G -> H_1 -> Z^g -> 0;
    both ends are returned, and since Z^g is free the sequence splits.
    """
    mode = _mode(rep, mode)
    field = rep.field
    m, g = rep.fiber_rank, rep.g
    HG = group_coinvariants(rep, mode)
    stacked = [[] for _ in range(m)]
    for A in rep.matrices:
        D = A - FieldMatrix.identity(m, field)
        for r in range(m):
            stacked[r].extend(D.rows[r])
    r = FieldMatrix(stacked, field).rank() if m else 0
    top = AbelianGroup(g * m - r, ())
    hg_rank = HG.value if mode == "field" else HG.value.rank
    euler = 1 - g + (-1) ** rep.n * hg_rank + (-1) ** (rep.n + 1) * top.rank
    expected = (1 - g) * (1 + (-1) ** rep.n * m)
    out = {"n": rep.n, "euler": euler, "euler_expected": expected, "euler_ok": euler == expected}
    Hn = HG.value
    if rep.n > 1:
        out["H_1"] = AbelianGroup(g, ())
        out[f"H_{rep.n}"] = Hn
        out[f"H_{rep.n + 1}"] = top
    else:
        out["H_1_sub"] = Hn
        out["H_1_quotient"] = AbelianGroup(g, ())
        if mode == "integer":
            out["H_1"] = Hn + AbelianGroup(g, ())
        out["H_2"] = top
    return out


def _rational_modules(rep, mode):
    Mf = global_alexander_module(rep, mode)
    loc = local_alexander_module(rep, mode, Mf)
    d = rep.distinguished
    H_mod = module_from_automorphism(rep.matrices[d])
    Mf_mod = module_from_automorphism(Mf.quotient_action(d))
    return Mf, loc, H_mod, Mf_mod, loc.rational_module


def factorization_chain_report(rep, mode=None):
    """Dimensions along H -> M(f) -> M(f, b) with the dominance verdicts."""
    mode = _mode(rep, mode)
    Mf, loc, H_mod, Mf_mod, loc_mod = _rational_modules(rep, mode)
    dims = [rep.fiber_rank, Mf.dimension, loc.quotient.dimension]
    notes = []
    if rep.h_good:
        notes.append(
            f"M(f,{loc.label}) surjects onto H_{rep.n}(M^c_X) for X over {loc.label}; "
            "it is an upper bound, which may be strict"
        )
    return {
        "label": loc.label,
        "dimensions": dims,
        "modules": [str(H_mod), str(Mf_mod), str(loc_mod)],
        "global": str(Mf),
        "local": str(loc),
        "dominance": [dominance_check(H_mod, Mf_mod), dominance_check(Mf_mod, loc_mod)],
        "notes": notes,
    }


def divisibility_check(rep, w, mode=None):
    """Delta(M(f,b))^(l) divides charpoly(rho(w)), l the winding number of w.

    Returns (verdict, quotient-or-remainder, ell).
    """
    mode = _mode(rep, mode)
    loc = local_alexander_module(rep, mode)
    delta = alexander_polynomial(loc.rational_module)
    ell = winding(rep, w)
    P = power_transform(delta, abs(ell))
    if ell < 0:
        P = P.reciprocal().monic()
    chi = charpoly(evaluate_word(rep, w))
    q, r = divmod(chi, P.change_field(chi.field) if P.field is not chi.field else P)
    if r:
        return False, r, ell
    return True, q, ell


__all__ = [
    "CoinvariantsResult",
    "LocalModuleResult",
    "MultiActionModule",
    "coinvariants_agree",
    "divisibility_check",
    "factorization_chain_report",
    "global_alexander_module",
    "group_coinvariants",
    "local_alexander_module",
    "total_space_homology",
]

"""Exact matrix algebra over cyclotomic fields, over Z and over K[t]."""

from dataclasses import dataclass

from .arith.field import QQ, FieldElement
from .arith.poly import Poly


# ---------------------------------------------------------------------------
# matrix containers


class FieldMatrix:
    """Immutable dense matrix with entries in a cyclotomic field."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, rows, field=None):
        rows = [list(r) for r in rows]
        if field is None:
            field = next(
                (x.field for r in rows for x in r if isinstance(x, FieldElement) and not x.is_rational()),
                QQ,
            )
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        data = tuple(tuple(field(x) for x in r) for r in rows)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    def __reduce__(self):
        return (FieldMatrix, (self.rows, self.field))

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls([[field.zero] * c for _ in range(r)], field)

    @classmethod
    def diagonal(cls, entries, field=None):
        entries = list(entries)
        if field is None:
            field = next((x.field for x in entries if isinstance(x, FieldElement) and not x.is_rational()), QQ)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, columns, field):
        columns = [list(c) for c in columns]
        if not columns:
            raise ValueError("need at least one column")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(len(columns[0]))], field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return FieldMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], self.field)

    def change_field(self, field):
        if field is self.field:
            return self
        return FieldMatrix([[_move(x, field) for x in r] for r in self.rows], field)

    def _align(self, other):
        if other.field is self.field:
            return self, other
        if self.field.order % other.field.order == 0:
            return self, other.change_field(self.field)
        return self.change_field(other.field), other

    def __matmul__(self, other):
        if isinstance(other, FieldMatrix):
            a, b = self._align(other)
            if a.ncols != b.nrows:
                raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
            bcols = b.columns()
            zero = a.field.zero
            out = []
            for r in a.rows:
                row = []
                for col in bcols:
                    acc = zero
                    for x, y in zip(r, col):
                        if x and y:
                            acc = acc + x * y
                    row.append(acc)
                out.append(row)
            return FieldMatrix(out, a.field)
        # matrix times vector
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, vec, self.field) for r in self.rows)

    def __add__(self, other):
        a, b = self._align(other)
        if a.shape != b.shape:
            raise ValueError("shape mismatch")
        return FieldMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)], a.field)

    def __sub__(self, other):
        a, b = self._align(other)
        if a.shape != b.shape:
            raise ValueError("shape mismatch")
        return FieldMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)], a.field)

    def __neg__(self):
        return FieldMatrix([[-x for x in r] for r in self.rows], self.field)

    def scale(self, c):
        return FieldMatrix([[x * c for x in r] for r in self.rows], self.field)

    def __pow__(self, k):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldMatrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s)
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.rows))
        return self._hash

    def __repr__(self):
        return f"FieldMatrix({[[str(x) for x in r] for r in self.rows]}, N={self.field.order})"

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]

    def is_identity(self):
        return self == FieldMatrix.identity(self.nrows, self.field)

    def is_integral(self):
        return all(x.is_integer() for r in self.rows for x in r)

    def to_int(self):
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix([[int(x.coeffs[0]) for x in r] for r in self.rows])

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        return det(self.rows, self.field)

    def inverse(self):
        return FieldMatrix(inverse(self.rows, self.field), self.field)

    def rank(self):
        return rank(self.rows, self.field)

    def charpoly(self):
        return charpoly(self)

    def kron_identity(self, k):
        """Block matrix A (x) I_k."""
        n = self.nrows
        zero = self.field.zero
        out = [[zero] * (n * k) for _ in range(n * k)]
        for i in range(n):
            for j in range(n):
                x = self.rows[i][j]
                if x:
                    for s in range(k):
                        out[i * k + s][j * k + s] = x
        return FieldMatrix(out, self.field)


def _move(x, field):
    if x.field is field or x.is_rational():
        return field(x) if x.is_rational() else x
    return x.field.embed(x, field)


def _dot(r, v, field):
    acc = field.zero
    for x, y in zip(r, v):
        if x and y:
            acc = acc + x * y
    return acc


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    def __reduce__(self):
        return (IntMatrix, (self.rows, self.ncols))

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)], c)

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return IntMatrix([list(c) for c in zip(*self.rows)], self.nrows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
            return IntMatrix([[sum(x * y for x, y in zip(r, c)) for c in cols] for r in self.rows], other.ncols)
        vec = list(other)
        return tuple(sum(x * y for x, y in zip(r, vec)) for r in self.rows)

    def __add__(self, other):
        return IntMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return IntMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return IntMatrix([[-x for x in r] for r in self.rows], self.ncols)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def to_field(self, field=QQ):
        return FieldMatrix(self.rows, field) if self.nrows else FieldMatrix([], field)

    def det(self):
        return int(det(self.to_field().rows, QQ).to_fraction())

    def inverse(self):
        """Inverse in GL(Z); raises ValueError if det is not +-1."""
        inv = self.to_field().inverse()
        if not inv.is_integral():
            raise ValueError("matrix is not invertible over Z")
        return inv.to_int()

    def rank(self):
        return rank(self.to_field().rows, QQ)


# ---------------------------------------------------------------------------
# Gaussian elimination over a field


def rref(rows, field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    A = [list(r) for r in rows]
    if not A:
        return [], []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv if x else x for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y if y else x for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r] + A[r:], pivots


def rank(rows, field):
    return len(rref(rows, field)[1])


def det(rows, field):
    A = [list(r) for r in rows]
    n = len(A)
    result = field.one
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return field.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        piv = A[c][c]
        result = result * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x - f * y if y else x for x, y in zip(A[i], A[c])]
    return result


def inverse(rows, field):
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(rows)]
    R, piv = rref(aug, field)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in R[:n]]


def kernel_basis(A):
    """Basis of the right kernel {x : A x = 0} of a FieldMatrix."""
    field = A.field
    n = A.ncols
    if A.nrows == 0:
        return [tuple(field.one if i == j else field.zero for i in range(n)) for j in range(n)]
    R, piv = rref(A.rows, field)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, p in zip(R, piv):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def span_basis(vectors, field, length):
    """RREF basis (as tuples) of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    R, piv = rref(vectors, field)
    return [tuple(r) for r in R[: len(piv)]]


def charpoly(A):
    """Characteristic polynomial det(tI - A) via Hessenberg reduction."""
    field = A.field
    n = A.nrows
    H = [list(r) for r in A.rows]
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        p = next((i for i in range(c + 1, n) if H[i][c]), None)
        if p is None:
            continue
        if p != c + 1:
            H[c + 1], H[p] = H[p], H[c + 1]
            for r in H:
                r[c + 1], r[p] = r[p], r[c + 1]
        inv = H[c + 1][c].inverse()
        for i in range(c + 2, n):
            f = H[i][c] * inv
            if f:
                H[i] = [x - f * y for x, y in zip(H[i], H[c + 1])]
                for r in H:
                    r[c + 1] = r[c + 1] + f * r[i]
    t = Poly.t(field)
    polys = [Poly.one(field)]
    for k in range(n):
        pk = (t - H[k][k]) * polys[k]
        prod = field.one
        for i in range(k - 1, -1, -1):
            prod = prod * H[i + 1][i]
            if not prod:
                break
            coeff = H[i][k] * prod
            if coeff:
                pk = pk - polys[i] * coeff
        polys.append(pk)
    return polys[n]


# ---------------------------------------------------------------------------
# abelian groups and the integer Smith form


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/c_1 + ... with c_1 | c_2 | ..., every c_i >= 2."""

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(int(c) for c in self.torsion)
        if any(c < 2 for c in t):
            raise ValueError("torsion coefficients must be >= 2; use AbelianGroup.from_orders")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_orders(cls, rank, orders):
        """Canonicalize Z^rank + sum Z/o_i for arbitrary cyclic orders o_i (0 means Z)."""
        orders = [abs(int(o)) for o in orders]
        rank += sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(rank, ())
        snf = smith_normal_form_Z(IntMatrix.diagonal(finite))
        return cls(rank, tuple(d for d in snf.diagonal if d > 1))

    @property
    def order(self):
        """Cardinality, or None when infinite."""
        if self.rank:
            return None
        out = 1
        for c in self.torsion:
            out *= c
        return out

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def is_free(self):
        return not self.torsion

    def __add__(self, other):
        return AbelianGroup.from_orders(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("ℤ")
        elif self.rank > 1:
            parts.append(f"ℤ^{self.rank}")
        parts += [f"ℤ/{c}" for c in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple  # min(rows, cols) nonnegative entries d_1 | d_2 | ...
    U: IntMatrix
    V: IntMatrix

    @property
    def factors(self):
        return [d for d in self.diagonal if d]

    @property
    def rank(self):
        return len(self.factors)


def smith_normal_form_Z(A):
    """Smith form with unimodular U, V such that U A V is diagonal.

    Pivot on the entry of least absolute value to limit growth.
    """
    m, n = A.nrows, A.ncols
    D = [list(r) for r in A.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for r in D:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        done = False
            if not done:
                # a smaller remainder exists in row/col t: move it to the pivot
                cands = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
                cands += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
                _, pi, pj = min(cands)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = tuple(D[i][i] for i in range(min(m, n)))
    return SmithForm(diag, IntMatrix(U, m), IntMatrix(V, n))


def cokernel_Z(A):
    """Z^rows / (column span of A) as a canonical AbelianGroup."""
    if A.ncols == 0:
        return AbelianGroup(A.nrows, ())
    snf = smith_normal_form_Z(A)
    nonzero = snf.factors
    return AbelianGroup(A.nrows - len(nonzero), tuple(d for d in nonzero if d > 1))


def kernel_basis_Z(A):
    """Z-basis of {x in Z^cols : A x = 0} (a saturated, hence free, subgroup)."""
    if A.nrows == 0:
        return [tuple(int(i == j) for i in range(A.ncols)) for j in range(A.ncols)]
    snf = smith_normal_form_Z(A)
    r = snf.rank
    return [snf.V.column(j) for j in range(r, A.ncols)]


def hermite_normal_form(vectors, length):
    """Row Hermite normal form of the lattice spanned by integer vectors.

    Rows are returned top-down with strictly increasing pivot columns,
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    A = [list(v) for v in vectors if any(v)]
    rows = []
    col = 0
    while A and col < length:
        nz = [r for r in A if r[col]]
        if not nz:
            col += 1
            continue
        zero = [r for r in A if not r[col]]
        # Euclid on column `col` among the nonzero rows
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    zero.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        rows.append(piv)
        A = [r for r in zero if any(r)]
        col += 1
    # reduce entries above pivots
    for k in range(len(rows)):
        pc = next(j for j, x in enumerate(rows[k]) if x)
        p = rows[k][pc]
        for i in range(k):
            q = rows[i][pc] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]
    return [tuple(r) for r in rows]


# ---------------------------------------------------------------------------
# Smith form over K[t]


def smith_normal_form_poly(M, field=None, drop_units=False):
    """Invariant factors d_1 | d_2 | ... of a matrix of polynomials.

    ``M`` is a list of rows of Poly.  Pivots are chosen of minimal degree.
    Returns the monic nonzero diagonal; with ``drop_units`` the constant
    factors (all equal to 1) are omitted.
    """
    A = [list(r) for r in M]
    if not A:
        return []
    if field is None:
        field = A[0][0].field
    m, n = len(A), len(A[0])

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]

    diag = []
    t = 0
    while t < min(m, n):
        cands = [(A[i][j].degree, i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not cands:
            break
        _, pi, pj = min(cands)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q, r = divmod(A[i][t], piv)
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if r:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = divmod(A[t][j], piv)
                    for row in A:
                        row[j] = row[j] - q * row[t]
                    if r:
                        dirty = True
            if dirty:
                cands = [(A[i][t].degree, i, t) for i in range(t, m) if A[i][t]]
                cands += [(A[t][j].degree, t, j) for j in range(t, n) if A[t][j]]
                _, pi, pj = min(cands)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] and not piv.divides(A[i][j])), None)
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(A[t][t].monic())
        t += 1
    if drop_units:
        diag = [d for d in diag if d.degree > 0]
    return diag


# ---------------------------------------------------------------------------
# saturation under operator families


def saturate_subgroup(generators, operators, mode="field", field=None):
    """Smallest subspace / subgroup containing ``generators`` and stable
    under every operator and its inverse.

    Field mode returns an RREF basis of a subspace of K^m; integer mode
    returns the Hermite basis of a subgroup of Z^m.  In both modes the
    iterate is a canonical form of an increasing chain (dimension is
    bounded by m, and Z^m is Noetherian), so the loop stops once a pass
    leaves the canonical basis unchanged.
    """
    operators = list(operators)
    gens = [tuple(g) for g in generators]
    if mode == "field":
        if field is None:
            field = operators[0].field if operators else QQ
        mats = []
        for op in operators:
            op = op if isinstance(op, FieldMatrix) else op.to_field(field)
            if not op.is_square():
                raise ValueError("operators must be square")
            mats.append(op)
            mats.append(op.inverse())
        m = mats[0].nrows if mats else (len(gens[0]) if gens else 0)
        for g in gens:
            if len(g) != m:
                raise ValueError("dimension mismatch between generators and operators")
        basis = span_basis([[field(x) for x in g] for g in gens], field, m)
        while True:
            images = [op @ v for op in mats for v in basis]
            new = span_basis(list(basis) + images, field, m)
            if len(new) == len(basis):
                return new
            basis = new
    if mode == "integer":
        mats = []
        for op in operators:
            op = op if isinstance(op, IntMatrix) else op.to_int()
            if op.nrows != op.ncols:
                raise ValueError("operators must be square")
            mats.append(op)
            mats.append(op.inverse())
        m = mats[0].nrows if mats else (len(gens[0]) if gens else 0)
        for g in gens:
            if len(g) != m:
                raise ValueError("dimension mismatch between generators and operators")
        basis = hermite_normal_form(gens, m)
        while True:
            images = [op @ v for op in mats for v in basis]
            new = hermite_normal_form(list(basis) + images, m)
            if new == basis:
                return new
            basis = new
    raise ValueError(f"unknown mode {mode!r}")


def lattice_contains(hnf_rows, v):
    """Membership of an integer vector in the lattice with the given Hermite basis."""
    v = list(v)
    for row in hnf_rows:
        pc = next(j for j, x in enumerate(row) if x)
        if any(v[:pc]):
            return False
        if v[pc] % row[pc]:
            return False
        q = v[pc] // row[pc]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def reduce_modulo(v, basis_rref, pivots):
    """Reduce a vector modulo a subspace given by its RREF basis."""
    v = list(v)
    for row, p in zip(basis_rref, pivots):
        c = v[p]
        if c:
            v = [x - c * y if y else x for x, y in zip(v, row)]
    return v


def pivots_of(basis_rref):
    return [next(j for j, x in enumerate(r) if x) for r in basis_rref]


__all__ = [
    "AbelianGroup",
    "FieldMatrix",
    "IntMatrix",
    "SmithForm",
    "charpoly",
    "cokernel_Z",
    "det",
    "hermite_normal_form",
    "kernel_basis",
    "kernel_basis_Z",
    "lattice_contains",
    "rank",
    "rref",
    "saturate_subgroup",
    "smith_normal_form_Z",
    "smith_normal_form_poly",
    "span_basis",
]

"""Representations of a free group on fiber homology.

Generators are indexed from 0 internally.  Words act by ordered
products: the word g_0 g_1 evaluates to m_0 @ m_1.
"""

import re
from dataclasses import dataclass, field as dc_field

from .arith.field import QQ, CyclotomicField, lcm
from .arith.poly import Poly
from .linalg import FieldMatrix, smith_normal_form_poly


@dataclass(frozen=True)
class FreeWord:
    letters: tuple = ()  # ((generator index, +1 | -1), ...)

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            if i < 0:
                raise ValueError("generator index must be nonnegative")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def generator(cls, i, power=1):
        e = 1 if power > 0 else -1
        return cls(((i, e),) * abs(power))

    def __mul__(self, other):
        return FreeWord(self.letters + other.letters)

    def inverse(self):
        return FreeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def reduced(self):
        out = []
        for letter in self.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return FreeWord(tuple(out))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"g{i + 1}" + ("^-1" if e < 0 else "") for i, e in self.letters)


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()


_LETTER = re.compile(r"^(.+?)(?:\^(-?\d+))?$")


def parse_word(text, labels=()):
    """Parse ``"g1 g2^-1 g1^2"``; tokens may also be generator labels.

    ``g<k>`` is 1-based, matching the usual gamma_1, ..., gamma_g.
    """
    letters = []
    for tok in text.replace("*", " ").split():
        m = _LETTER.match(tok)
        name, power = m.group(1), int(m.group(2)) if m.group(2) else 1
        if name in labels:
            idx = list(labels).index(name)
        elif re.fullmatch(r"g\d+", name):
            idx = int(name[1:]) - 1
            if idx < 0:
                raise ValueError(f"bad generator {name!r}")
        else:
            raise ValueError(f"unknown generator {name!r}")
        if power == 0:
            continue
        letters.extend([(idx, 1 if power > 0 else -1)] * abs(power))
    return FreeWord(tuple(letters))


@dataclass(frozen=True)
class MonodromyRep:
    matrices: tuple
    labels: tuple
    distinguished: int = 0
    n: int = 1
    h_good: bool = False
    coefficients: str = "field"  # or "integers"
    b_n_F: object = None
    euler_MX: object = None
    _inverses: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        mats = [m if isinstance(m, FieldMatrix) else m.to_field() for m in self.matrices]
        if not mats:
            raise ValueError("need at least one generator")
        order = 1
        for m in mats:
            order = lcm(order, m.field.order)
        field = CyclotomicField(order)
        mats = tuple(m.change_field(field) for m in mats)
        size = mats[0].nrows
        for k, m in enumerate(mats):
            if m.shape != (size, size):
                raise ValueError(f"matrix {k} is not {size}x{size}")
            d = m.det()
            if not d:
                raise ValueError(f"matrix {k} is not invertible")
            if self.coefficients == "integers":
                if not m.is_integral():
                    raise ValueError(f"matrix {k} has non-integer entries")
                if d not in (1, -1):
                    raise ValueError(f"matrix {k} is not invertible over Z")
            elif self.coefficients != "field":
                raise ValueError("coefficients must be 'field' or 'integers'")
        labels = tuple(str(x) for x in self.labels)
        if len(labels) != len(mats):
            raise ValueError("one label per generator")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be unique")
        if not 0 <= self.distinguished < len(mats):
            raise ValueError("distinguished index out of range")
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "labels", labels)

    @property
    def g(self):
        return len(self.matrices)

    @property
    def fiber_rank(self):
        return self.matrices[0].nrows

    @property
    def field(self):
        return self.matrices[0].field

    @property
    def integral(self):
        return self.coefficients == "integers"

    def index_of(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def with_distinguished(self, label_or_index):
        idx = label_or_index if isinstance(label_or_index, int) else self.index_of(label_or_index)
        return self.replace(distinguished=idx)

    def replace(self, **kw):
        base = dict(
            matrices=self.matrices,
            labels=self.labels,
            distinguished=self.distinguished,
            n=self.n,
            h_good=self.h_good,
            coefficients=self.coefficients,
            b_n_F=self.b_n_F,
            euler_MX=self.euler_MX,
        )
        base.update(kw)
        return MonodromyRep(**base)

    def inverse_of(self, i):
        if i not in self._inverses:
            self._inverses[i] = self.matrices[i].inverse()
        return self._inverses[i]

    def conjugate(self, P):
        """The rep v -> P v, i.e. matrices P m_i P^-1."""
        Pinv = P.inverse()
        return self.replace(matrices=tuple(P @ m @ Pinv for m in self.matrices))


def evaluate_word(rep, w):
    out = FieldMatrix.identity(rep.fiber_rank, rep.field)
    for i, e in w.letters:
        if i >= rep.g:
            raise IndexError(f"generator {i + 1} out of range (g = {rep.g})")
        out = out @ (rep.matrices[i] if e > 0 else rep.inverse_of(i))
    return out


def winding(rep, w):
    return sum(e for i, e in w.letters if i == rep.distinguished)


def similarity_invariants(A):
    """Nonunit invariant factors of tI - A (a complete similarity invariant)."""
    field = A.field
    t = Poly.t(field)
    n = A.nrows
    M = [[(t - A[i, j]) if i == j else Poly.constant(-A[i, j], field) for j in range(n)] for i in range(n)]
    return tuple(smith_normal_form_poly(M, field, drop_units=True)) if n else ()


def conjugacy_check(A, B):
    if A.shape != B.shape or not A.is_square():
        raise ValueError(f"size mismatch {A.shape} vs {B.shape}")
    A, B = A._align(B)
    return similarity_invariants(A) == similarity_invariants(B)


def monodromy_at_infinity(rep):
    return evaluate_word(rep, FreeWord(tuple((i, 1) for i in range(rep.g))))


def tensor_identity_lift(rep, k, n_shift=0):
    """Replace each m_i by m_i (x) I_k (Thom-Sebastiani with a trivial factor)."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1 and n_shift == 0:
        return rep
    return rep.replace(
        matrices=tuple(m.kron_identity(k) for m in rep.matrices),
        n=rep.n + n_shift,
        b_n_F=None if rep.b_n_F is None else rep.b_n_F * k,
    )


def identity_rep(m, g=1, field=QQ, n=1, labels=None):
    labels = labels or [f"b{i + 1}" for i in range(g)]
    I = FieldMatrix.identity(m, field)
    return MonodromyRep(tuple([I] * g), tuple(labels), 0, n, False, "field")

"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/(Phi_N(x)) with ``fractions.Fraction`` coordinates.  ``N = 1``
(and ``N = 2``) give the rationals.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def euler_phi(n):
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def lcm(a, b):
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    # t^n - 1 divided by every Phi_d with d | n, d < n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_exact_div(num, cyclotomic_coeffs(d))
    return tuple(num)


def _int_exact_div(num, den):
    # den monic with integer coefficients
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact division")
    return out


class CyclotomicField:
    """The field Q(zeta_N); one shared instance per order."""

    _instances = {}

    def __new__(cls, order=1):
        order = int(order)
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        inst = cls._instances.get(order)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(order)
            cls._instances[order] = inst
        return inst

    def _setup(self, order):
        self.order = order
        self.modulus = cyclotomic_coeffs(order)
        self.degree = len(self.modulus) - 1
        self._zero = FieldElement(self, (Fraction(0),) * self.degree)
        one = [Fraction(0)] * self.degree
        one[0] = Fraction(1)
        self._one = FieldElement(self, tuple(one))
        self._zeta = self._power_of_x(1)

    def __reduce__(self):
        return (CyclotomicField, (self.order,))

    def __repr__(self):
        return "QQ" if self.degree == 1 else f"CyclotomicField({self.order})"

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def zeta(self):
        """The generator z = exp(2*pi*i/N)."""
        return self._zeta

    @property
    def is_rational(self):
        return self.degree == 1

    @property
    def roots_of_unity_order(self):
        """Order w of the group of roots of unity contained in the field."""
        return self.order if self.order % 2 == 0 else 2 * self.order

    def _power_of_x(self, k):
        coeffs = [Fraction(0)] * (max(k + 1, self.degree))
        coeffs[k] = Fraction(1)
        return FieldElement(self, self._reduce(coeffs))

    def _reduce(self, coeffs):
        d = self.degree
        mod = self.modulus
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                base = k - d
                for i in range(d):
                    if mod[i]:
                        coeffs[base + i] -= c * mod[i]
        coeffs = coeffs[:d]
        if len(coeffs) < d:
            coeffs += [Fraction(0)] * (d - len(coeffs))
        return tuple(coeffs)

    def zeta_power(self, k):
        """z^k for any integer k (negative powers allowed)."""
        return self._power_of_x(k % self.order) if self.order > 1 else self._one

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.is_rational():
                return self.from_rational(value.coeffs[0])
            raise TypeError(f"cannot coerce element of {value.field!r} into {self!r}")
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        if isinstance(value, str):
            from .grammar import parse_entry
            return parse_entry(value, self)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_rational(self, q):
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return FieldElement(self, tuple(coeffs))

    def from_coeffs(self, coeffs):
        """Element sum c_i z^i; longer coefficient lists are reduced mod Phi_N."""
        return FieldElement(self, self._reduce([Fraction(c) for c in coeffs]))

    def elements_of_unity(self):
        """All roots of unity in the field, as (order, element) pairs."""
        w = self.roots_of_unity_order
        gen = self.zeta if self.order % 2 == 0 else -self.zeta
        out = []
        acc = self.one
        for k in range(w):
            out.append((w // gcd(k, w), acc))
            acc = acc * gen
        return out

    def embed(self, elem, target):
        """Image of ``elem`` under Q(zeta_N) -> Q(zeta_L), z_N -> z_L^(L/N)."""
        if target.order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{target.order})")
        step = target.order // self.order
        acc = target.zero
        for i, c in enumerate(elem.coeffs):
            if c:
                acc = acc + target.zeta_power(i * step) * c
        return acc

    def restrict(self, elem, source):
        """Inverse of ``embed``: express an element of ``source`` lying in self.

        Raises ValueError when the element is not in the image.
        """
        left = _embedding_left_inverse(self.order, source.order)
        target = elem.coeffs
        sol = tuple(
            sum((row[k] * target[k] for k in range(len(target)) if row[k]), Fraction(0))
            for row in left
        )
        candidate = FieldElement(self, sol)
        if self.embed(candidate, source) != elem:
            raise ValueError("element does not lie in the subfield")
        return candidate


@lru_cache(maxsize=None)
def _embedding_left_inverse(small, large):
    """Left inverse (A^T A)^-1 A^T of the embedding matrix A."""
    K = CyclotomicField(small)
    L = CyclotomicField(large)
    cols = [K.embed(K.zeta_power(i), L).coeffs for i in range(K.degree)]
    n, d = K.degree, L.degree
    ata = [[sum(cols[i][k] * cols[j][k] for k in range(d)) for j in range(n)] for i in range(n)]
    aug = [ata[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv_ata = [row[n:] for row in aug]
    return tuple(tuple(sum(inv_ata[i][j] * cols[j][k] for j in range(n)) for k in range(d)) for i in range(n))


class FieldElement:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (_rebuild_element, (self.field.order, self.coeffs))

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.is_rational():
                return self.field.from_rational(other.coeffs[0])
            if self.is_rational():
                return None
            raise TypeError("elements of different cyclotomic fields")
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- predicates -------------------------------------------------------
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_integer(self):
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                return other.__radd__(self)
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                return (-other).__radd__(self)
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                return other.__rmul__(self)
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.coeffs[0] * o.coeffs[0],))
        if o.is_rational():
            c = o.coeffs[0]
            return FieldElement(self.field, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return FieldElement(self.field, tuple(c * b for b in o.coeffs))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return FieldElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        # extended Euclid of a(x) against Phi_N(x) over Q
        inv = _poly_inverse_mod(list(self.coeffs), [Fraction(c) for c in self.field.modulus])
        return FieldElement(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElement):
                return other.inverse().__rmul__(self)
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- Galois action and norm ------------------------------------------
    def galois(self, u):
        """Apply the automorphism z -> z^u (u coprime to N)."""
        F = self.field
        acc = F.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + F.zeta_power(i * u) * c
        return acc

    def norm(self):
        """Norm down to Q, as a Fraction."""
        F = self.field
        if F.degree == 1:
            return self.coeffs[0]
        acc = F.one
        for u in range(1, F.order):
            if gcd(u, F.order) == 1:
                acc = acc * self.galois(u)
        return acc.to_fraction()

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs[0]) if self.is_rational() else hash((self.field.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self):
        return self.coeffs

    def __repr__(self):
        return f"FieldElement({self.field.order}, {str(self)!r})"

    def __str__(self):
        return format_element(self)


def _rebuild_element(order, coeffs):
    return FieldElement(CyclotomicField(order), coeffs)


def _poly_inverse_mod(a, m):
    """Inverse of a modulo m in Q[x]; both lowest degree first."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(n, d):
        n = list(n)
        q = [Fraction(0)] * max(len(n) - len(d) + 1, 1)
        inv_lead = 1 / d[-1]
        for k in range(len(n) - len(d), -1, -1):
            c = n[k + len(d) - 1] * inv_lead
            q[k] = c
            if c:
                for i, x in enumerate(d):
                    n[k + i] -= c * x
        return trim(q), trim(n[: len(d) - 1])

    def sub(p, q):
        out = [Fraction(0)] * max(len(p), len(q))
        for i, x in enumerate(p):
            out[i] += x
        for i, x in enumerate(q):
            out[i] -= x
        return trim(out)

    def mul(p, q):
        if not p or not q:
            return []
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return out

    r0, r1 = trim(list(m)), trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible modulo the cyclotomic polynomial")
    c = 1 / r0[0]
    return [x * c for x in s0]


def format_element(x, var="z"):
    terms = []
    for i in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[i]
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        terms.append((c, mono))
    if not terms:
        return "0"
    out = []
    for k, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


QQ = CyclotomicField(1)

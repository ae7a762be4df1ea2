"""Univariate polynomials over a cyclotomic field."""

from fractions import Fraction

from .field import QQ, CyclotomicField, FieldElement, cyclotomic_coeffs, format_element


class Poly:
    """Immutable polynomial sum c_i t^i with FieldElement coefficients.

    ``coeffs`` is stored lowest degree first and trimmed, so the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, coeffs, field=None):
        coeffs = list(coeffs)
        if field is None:
            field = next((c.field for c in coeffs if isinstance(c, FieldElement) and not c.is_rational()), QQ)
        coeffs = [field(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs, self.field))

    @classmethod
    def _raw(cls, field, coeffs):
        p = object.__new__(cls)
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(p, "field", field)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        object.__setattr__(p, "_hash", None)
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def t(cls, field=QQ):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, c, field=QQ):
        return cls._raw(field, (field(c),))

    @classmethod
    def one(cls, field=QQ):
        return cls._raw(field, (field.one,))

    @classmethod
    def zero(cls, field=QQ):
        return cls._raw(field, ())

    @classmethod
    def linear(cls, root, field=None):
        """The monic linear polynomial t - root."""
        if field is None:
            field = root.field if isinstance(root, FieldElement) else QQ
        return cls._raw(field, (-field(root), field.one))

    @classmethod
    def from_ints(cls, ints, field=QQ):
        return cls._raw(field, tuple(field.from_rational(c) for c in ints))

    # -- basic properties -------------------------------------------------
    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = lc.inverse()
        return Poly._raw(self.field, tuple(c * inv for c in self.coeffs))

    def has_rational_coeffs(self):
        return all(c.is_rational() for c in self.coeffs)

    def is_integral(self):
        return all(c.is_integer() for c in self.coeffs)

    def int_coeffs(self):
        if not self.is_integral():
            raise ValueError(f"{self} does not have integer coefficients")
        return [int(c.coeffs[0]) for c in self.coeffs]

    def change_field(self, field):
        if field is self.field:
            return self
        if self.field.order == field.order:
            return self
        if field.order % self.field.order == 0:
            return Poly._raw(field, tuple(self.field.embed(c, field) for c in self.coeffs))
        if self.has_rational_coeffs():
            return Poly._raw(field, tuple(field.from_rational(c.coeffs[0]) for c in self.coeffs))
        raise TypeError(f"cannot move {self} into {field!r}")

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is self.field:
                return other
            if other.has_rational_coeffs():
                return other.change_field(self.field)
            if self.has_rational_coeffs():
                return None
            raise TypeError("polynomials over different fields")
        if isinstance(other, (int, Fraction, FieldElement)):
            return Poly._raw(self.field, (self.field(other),))
        return None

    def _promote(self, other):
        """Return (a, b) over a common field."""
        o = self._coerce(other)
        if o is not None:
            return self, o
        if isinstance(other, Poly):
            return self.change_field(other.field), other
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        n = max(len(a.coeffs), len(b.coeffs))
        z = a.field.zero
        return Poly._raw(a.field, tuple(
            (a.coeffs[i] if i < len(a.coeffs) else z) + (b.coeffs[i] if i < len(b.coeffs) else z)
            for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self.field(other)
            return Poly._raw(self.field, tuple(x * c for x in self.coeffs))
        try:
            a, b = self._promote(other)
        except TypeError:
            return NotImplemented
        if not a.coeffs or not b.coeffs:
            return Poly._raw(a.field, ())
        out = [a.field.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly._raw(a.field, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        a, b = self._promote(other)
        if not b.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        field = a.field
        rem = list(a.coeffs)
        db = len(b.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly._raw(field, ()), a
        inv_lead = b.coeffs[-1].inverse()
        quo = [field.zero] * (len(rem) - db)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + db]
            if c:
                c = c * inv_lead
                quo[k] = c
                for i, y in enumerate(b.coeffs):
                    if y:
                        rem[k + i] = rem[k + i] - c * y
        return Poly._raw(field, quo), Poly._raw(field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        """True if self | other."""
        if not self.coeffs:
            return not other
        return not (other % self)

    def __call__(self, x):
        """Horner evaluation at a field element, number or polynomial."""
        if isinstance(x, Poly):
            acc = Poly.zero(self.field)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = self.field(x) if not isinstance(x, FieldElement) else x
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly._raw(self.field, tuple(c * i for i, c in enumerate(self.coeffs) if i > 0))

    def reciprocal(self):
        """Monic polynomial whose roots are the inverses of the roots of self."""
        if not self.coeffs or self.coeffs[0].is_zero():
            raise ValueError("reciprocal needs a nonzero constant term")
        return Poly._raw(self.field, tuple(reversed(self.coeffs))).monic()

    # -- comparison / rendering ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == Poly._raw(self.field, (self.field(other),))
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple(self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self):
        """Canonical order: by degree, then coefficients from the top down."""
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Poly({str(self)!r}, N={self.field.order})"

    def __str__(self):
        return format_poly(self)


def format_poly(p, var="t"):
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c.is_rational():
            q = c.coeffs[0]
            sign = "-" if q < 0 else "+"
            a = abs(q)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
        else:
            sign = "+"
            inner = format_element(c)
            nonzero = [x for x in c.coeffs if x]
            if len(nonzero) == 1 and not mono:
                body = inner
                if inner.startswith("-"):
                    sign, body = "-", inner[1:]
            elif len(nonzero) == 1:
                if inner.startswith("-"):
                    sign, inner = "-", inner[1:]
                body = f"{inner}*{mono}"
            elif mono:
                body = f"({inner})*{mono}"
            elif inner.startswith("-"):
                sign, body = "-", f"({format_element(-c)})" if parts else format_element(-c)
            else:
                body = inner
        if not parts:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def poly_gcd(p, q):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = p._promote(q)
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p, q):
    """Return (g, s, u) with s*p + u*q = g, g the monic gcd."""
    a, b = p._promote(q)
    field = a.field
    s0, s1 = Poly.one(field), Poly.zero(field)
    u0, u1 = Poly.zero(field), Poly.one(field)
    while b:
        quo, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - quo * s1
        u0, u1 = u1, u0 - quo * u1
    if not a:
        return a, s0, u0
    inv = a.lc.inverse()
    return a * inv, s0 * inv, u0 * inv


def cyclotomic_poly(n, field=QQ):
    """Phi_n as a monic polynomial with integer coefficients."""
    return Poly.from_ints(cyclotomic_coeffs(n), field)


def resultant(p, q):
    """Resultant as the determinant of the Sylvester matrix.

    Rows are m = deg q shifted copies of p followed by n = deg p shifted
    copies of q, so Res(p, q) = lc(p)^deg(q) * prod q(roots of p).
    """
    from ..linalg import det

    p, q = p._promote(q)
    if not p or not q:
        raise ValueError("resultant of zero polynomial")
    n, m = p.degree, q.degree
    if n == 0 and m == 0:
        return p.field.one
    size = n + m
    zero = p.field.zero
    rows = []
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(p.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(q.coeffs)):
            row[i + k] = c
        rows.append(row)
    return det(rows, p.field)


def interpolate(points, field):
    """Lagrange interpolation through (x_i, y_i) pairs."""
    t = Poly.t(field)
    result = Poly.zero(field)
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        basis = Poly.one(field)
        denom = field.one
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * (t - xj)
                denom = denom * (field(xi) - xj)
        result = result + basis * (field(yi) / denom)
    return result


__all__ = [
    "Poly",
    "CyclotomicField",
    "cyclotomic_poly",
    "format_poly",
    "interpolate",
    "poly_gcd",
    "poly_xgcd",
    "resultant",
]

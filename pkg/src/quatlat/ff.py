"""Exact arithmetic in F_q (q = p^e, p an odd prime) and in the quadratic
extension F_q[Z] with Z^2 = c for a chosen non-square c.

Field elements are little-endian coefficient vectors mod p in the power
basis of a fixed monic irreducible modulus.  The modulus is the
lexicographically smallest monic irreducible polynomial of degree e
(highest coefficient compared first, i.e. ascending order of the integer
whose base-p digits are the lower coefficients), so a field is pinned
down by (p, e) alone and serializes reproducibly.  For e = 1 the modulus
is x and elements are plain residues.

Extension elements u + vZ are pairs of F_q elements.  The norm down to
F_q is N(u + vZ) = u^2 - c*v^2, which agrees with x * conj(x) and with
x^(q+1).  Every value is immutable and hashable.
"""

from __future__ import annotations

import functools
from typing import Iterator, Sequence


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_divmod(num: Sequence[int], den: Sequence[int], p: int):
    # dense little-endian int coefficients; den must have invertible lead
    num = list(num)
    dn = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
        dn -= 1
    lead_inv = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - dn, 1)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k] % p
        if c:
            f = (c * lead_inv) % p
            quot[k - dn] = f
            for i, dc in enumerate(den):
                num[k - dn + i] = (num[k - dn + i] - f * dc) % p
    rem = [c % p for c in num[:dn]]
    return quot, rem


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    # trial division by all monic polynomials of degree 1 .. deg/2
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for m in range(p**d):
            den, k = [], m
            for _ in range(d):
                den.append(k % p)
                k //= p
            den.append(1)
            _, rem = _poly_divmod(poly, den, p)
            if not any(rem):
                return False
    return True


def _smallest_irreducible(p: int, e: int):
    if e == 1:
        return (0, 1)
    for m in range(p**e):
        low, k = [], m
        for _ in range(e):
            low.append(k % p)
            k //= p
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


class Field:
    """The field F_q with q = p^e, for an odd prime p."""

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if e < 1:
            raise FieldError(f"extension degree {e} must be >= 1")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = _smallest_irreducible(p, e)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree e")
            if e > 1 and not _is_irreducible(modulus, p):
                raise FieldError("modulus is not irreducible")
        self.modulus = tuple(modulus)
        # reduction rows: x^(e+k) mod modulus for k = 0 .. e-2
        red = []
        row = [(-c) % p for c in self.modulus[:e]]
        for _ in range(max(e - 1, 0)):
            red.append(tuple(row))
            row = [0] + row[: e - 1]
            top = red[-1][e - 1] if e > 1 else 0
            if top:
                row = [(row[i] + top * red[0][i]) % p for i in range(e)]
            row = [c % p for c in row[:e]]
        self._red = red
        self.zero = FieldElem(self, (0,) * e)
        self.one = FieldElem(self, (1,) + (0,) * (e - 1))

    def element(self, value) -> "FieldElem":
        """Coerce an int (constant embedding) or a coefficient vector."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldError("element from a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.e - 1)
            return FieldElem(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.e:
            raise FieldError(f"coefficient vector longer than degree {self.e}")
        coeffs = coeffs + (0,) * (self.e - len(coeffs))
        return FieldElem(self, coeffs)

    def from_index(self, k: int) -> "FieldElem":
        """The k-th element in the fixed enumeration order (base-p digits)."""
        if not 0 <= k < self.q:
            raise FieldError(f"index {k} out of range for q={self.q}")
        coeffs = []
        for _ in range(self.e):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElem(self, tuple(coeffs))

    def elements(self) -> Iterator["FieldElem"]:
        for k in range(self.q):
            yield self.from_index(k)

    def _mul_coeffs(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * e - 1)
        for i in range(e):
            ai = a[i]
            if ai:
                for j in range(e):
                    conv[i + j] = (conv[i + j] + ai * b[j]) % p
        out = conv[:e]
        for k in range(e - 2, -1, -1):
            c = conv[e + k]
            if c:
                row = self._red[k]
                for i in range(e):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        return cls(data["p"], data["e"], data.get("modulus"))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __reduce__(self):
        return (Field, (self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field({self.p}, {self.e})"


class FieldElem:
    """An element of F_q as a coefficient vector; immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("FieldElem is immutable")

    def index(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        other = self.field.element(other)
        p = self.field.p
        return FieldElem(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        other = self.field.element(other)
        p = self.field.p
        return FieldElem(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self.field.element(other)
        return FieldElem(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        return self * other

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self.field.element(other).inverse()

    def __rtruediv__(self, other):
        return self.field.element(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, int):
            return self == self.field.element(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        return hash(self.coeffs)

    def __reduce__(self):
        return (FieldElem, (self.field, self.coeffs))

    def to_json(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        if self.field.e == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                s = "x" if i == 1 else f"x^{i}"
                terms.append(s if c == 1 else f"{c}{s}")
        return "+".join(terms) if terms else "0"


def make_field(p: int, e: int = 1) -> Field:
    return Field(p, e)


def is_square(x: FieldElem) -> bool:
    if x.is_zero():
        return True
    return x ** ((x.field.q - 1) // 2) == x.field.one


def find_nonsquare(field: Field) -> FieldElem:
    """First non-square of F_q* in the fixed enumeration order."""
    for k in range(1, field.q):
        x = field.from_index(k)
        if not is_square(x):
            return x
    raise FieldError("no non-square found (is q even?)")


def mult_order(x) -> int:
    """Smallest n >= 1 with x^n = 1; works for F_q and F_q[Z] elements."""
    if x.is_zero():
        raise FieldError("multiplicative order of zero")
    n, acc = 1, x
    one = x.ext.one if isinstance(x, QuadElem) else x.field.one
    while acc != one:
        acc = acc * x
        n += 1
    return n


class QuadExt:
    """The quadratic extension F_q[Z] of a field, with Z^2 = c non-square."""

    def __init__(self, field: Field, c):
        c = field.element(c)
        if c.is_zero() or is_square(c):
            raise FieldError(f"c = {c!r} is not a non-square in F_{field.q}")
        self.field = field
        self.c = c
        self.zero = QuadElem(self, field.zero, field.zero)
        self.one = QuadElem(self, field.one, field.zero)
        self.gen = QuadElem(self, field.zero, field.one)  # the element Z

    def element(self, u, v=0) -> "QuadElem":
        if isinstance(u, QuadElem):
            if u.ext != self:
                raise FieldError("element from a different extension")
            return u
        return QuadElem(self, self.field.element(u), self.field.element(v))

    def from_index(self, k: int) -> "QuadElem":
        q = self.field.q
        return QuadElem(self, self.field.from_index(k % q), self.field.from_index(k // q))

    def elements(self) -> Iterator["QuadElem"]:
        for k in range(self.field.q**2):
            yield self.from_index(k)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def __reduce__(self):
        return (QuadExt, (self.field, self.c))

    def __repr__(self):
        return f"QuadExt({self.field!r}, c={self.c!r})"


class QuadElem:
    """An element u + vZ of F_q[Z]; immutable."""

    __slots__ = ("ext", "u", "v")

    def __init__(self, ext: QuadExt, u: FieldElem, v: FieldElem):
        object.__setattr__(self, "ext", ext)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, *_):
        raise AttributeError("QuadElem is immutable")

    def index(self) -> int:
        return self.u.index() + self.ext.field.q * self.v.index()

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self.ext.element(other)
        return QuadElem(self.ext, self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        other = self.ext.element(other)
        return QuadElem(self.ext, self.u - other.u, self.v - other.v)

    def __neg__(self):
        return QuadElem(self.ext, -self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            return QuadElem(self.ext, self.u * other, self.v * other)
        other = self.ext.element(other)
        c = self.ext.c
        return QuadElem(
            self.ext,
            self.u * other.u + c * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int)):
            return self * self.ext.field.element(other) if isinstance(other, int) else self * other
        return NotImplemented

    def conj(self) -> "QuadElem":
        return QuadElem(self.ext, self.u, -self.v)

    def norm(self) -> FieldElem:
        return self.u * self.u - self.ext.c * self.v * self.v

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero extension element")
        return self.conj() * n.inverse()

    def __truediv__(self, other):
        return self * self.ext.element(other).inverse()

    def __pow__(self, n: int) -> "QuadElem":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ext.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, QuadElem):
            return NotImplemented
        return self.u == other.u and self.v == other.v and self.ext == other.ext

    def __hash__(self):
        return hash((self.u, self.v))

    def __reduce__(self):
        return (QuadElem, (self.ext, self.u, self.v))

    def to_json(self) -> list:
        return [self.u.to_json(), self.v.to_json()]

    def __repr__(self):
        if self.v.is_zero():
            return repr(self.u)
        if self.u.is_zero():
            return f"{self.v!r}Z" if self.v != self.ext.field.one else "Z"
        vs = "Z" if self.v == self.ext.field.one else f"{self.v!r}Z"
        return f"{self.u!r}+{vs}"


def conjugate(x: QuadElem) -> QuadElem:
    return x.conj()


def norm(x: QuadElem) -> FieldElem:
    return x.norm()


def norm_fiber(ext: QuadExt, s) -> tuple:
    """All xi in F_q[Z]* with N(xi) = s, in enumeration order; size q+1."""
    s = ext.field.element(s)
    if s.is_zero():
        raise FieldError("norm fiber over zero is empty of units")
    return _norm_fiber_cached(ext, s)


@functools.lru_cache(maxsize=256)
def _norm_fiber_cached(ext: QuadExt, s: FieldElem) -> tuple:
    out = []
    for x in ext.elements():
        if not x.is_zero() and x.norm() == s:
            out.append(x)
    return tuple(out)


def sigma_k(ext: QuadExt, xi: QuadElem, k: int) -> QuadElem:
    """The norm-twisted scaling (-c)^((1-p^k)/2) * N(xi)^((p^k-1)/2) * xi.

    The negative exponent of (-c) is taken via the field inverse.
    """
    if k < 1:
        raise FieldError("k must be >= 1")
    m = ext.field.p**k
    exp = (m - 1) // 2
    scale = ((-ext.c) ** exp).inverse() * xi.norm() ** exp
    return xi * scale

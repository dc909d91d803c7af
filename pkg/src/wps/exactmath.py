"""Exact scalar and univariate-polynomial arithmetic.

Two coefficient fields are supported: the rationals (stdlib Fraction) and
prime fields F_p.  Both are exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import FieldMismatch, ZeroPolynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 2, ascending."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


class RationalField:
    """The field of rationals; a single shared instance is exported as QQ."""

    def coerce(self, v) -> Fraction:
        if isinstance(v, FpElem):
            raise FieldMismatch("cannot coerce a prime-field element into the rationals")
        return Fraction(v)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Arithmetic context for integers modulo a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def coerce(self, v) -> "FpElem":
        if isinstance(v, FpElem):
            if v.p != self.p:
                raise FieldMismatch(f"element of F_{v.p} used in F_{self.p}")
            return v
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise FieldMismatch(f"denominator {v.denominator} vanishes mod {self.p}")
            return FpElem(v.numerator, self.p) / FpElem(v.denominator, self.p)
        return FpElem(int(v), self.p)

    @property
    def zero(self) -> "FpElem":
        return FpElem(0, self.p)

    @property
    def one(self) -> "FpElem":
        return FpElem(1, self.p)

    def elements(self) -> list["FpElem"]:
        return [FpElem(v, self.p) for v in range(self.p)]

    def units(self) -> list["FpElem"]:
        return [FpElem(v, self.p) for v in range(1, self.p)]

    def primitive_root(self) -> "FpElem":
        """Smallest generator of the multiplicative group."""
        m = self.p - 1
        for g in range(2, self.p):
            if all(pow(g, m // q, self.p) != 1 for q in prime_factors(m)):
                return FpElem(g, self.p)
        return self.one  # p = 2: the group is trivial

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"F_{self.p}"


class FpElem:
    """An element of F_p.  Mixed arithmetic with ints reduces them mod p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> "FpElem":
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElem(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(pow(self.value, n, self.p), self.p)

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElem(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, FpElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Fp", self.p, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return str(self.value)


def field_of(x) -> RationalField | PrimeField:
    """The field an element belongs to."""
    if isinstance(x, FpElem):
        return PrimeField(x.p)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a supported field element: {x!r}")


class UPolynomial:
    """Dense univariate polynomial over QQ or a PrimeField, constant term first."""

    def __init__(self, field, coeffs=()):
        self.field = field
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def zero(cls, field) -> "UPolynomial":
        return cls(field, ())

    @classmethod
    def monomial(cls, field, degree: int, coeff=1) -> "UPolynomial":
        return cls(field, [0] * degree + [coeff])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading(self):
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def _check_field(self, other: "UPolynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")

    def __add__(self, other: "UPolynomial") -> "UPolynomial":
        self._check_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + [z] * (n - len(self.coeffs))
        b = other.coeffs + [z] * (n - len(other.coeffs))
        return UPolynomial(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "UPolynomial") -> "UPolynomial":
        return self + (-other)

    def __neg__(self) -> "UPolynomial":
        return UPolynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other) -> "UPolynomial":
        if not isinstance(other, UPolynomial):
            return self.scale(other)
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return UPolynomial.zero(self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == z:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPolynomial(self.field, out)

    def __rmul__(self, other) -> "UPolynomial":
        return self.scale(other)

    def scale(self, c) -> "UPolynomial":
        c = self.field.coerce(c)
        return UPolynomial(self.field, [c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "UPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = UPolynomial(self.field, [1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UPolynomial"):
        self._check_field(other)
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        q = UPolynomial.zero(self.field)
        r = self
        d = other.degree()
        lead_inv = self.field.one / other.leading()
        while not r.is_zero() and r.degree() >= d:
            shift = r.degree() - d
            c = r.leading() * lead_inv
            t = UPolynomial.monomial(self.field, shift, c)
            q = q + t
            r = r - t * other
        return q, r

    def __floordiv__(self, other: "UPolynomial") -> "UPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "UPolynomial") -> "UPolynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "UPolynomial":
        return UPolynomial(self.field, [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UPolynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.one / self.leading())

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UPolynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.coeffs)))

    def to_string(self, var: str = "t") -> str:
        """Human form in ascending powers, e.g. '1 - t^6'."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if i == 0:
                body = str(mag)
            elif mag == self.field.one:
                body = var if i == 1 else f"{var}^{i}"
            else:
                body = f"{mag}*{var}" if i == 1 else f"{mag}*{var}^{i}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UPolynomial({self.to_string()})"


def upoly_gcd(a: UPolynomial, b: UPolynomial) -> UPolynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0,0) = 0."""
    if a.field != b.field:
        raise FieldMismatch(f"gcd over {a.field} and {b.field}")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def distinct_root_count(g: UPolynomial, exclude_zero: bool = False) -> int:
    """Number of distinct roots of g in the algebraic closure.

    Computed as deg(g / gcd(g, g')).  Over F_p this assumes every root
    multiplicity is below p (the derivative loses p-fold factors).
    """
    if g.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if g.degree() == 0:
        return 0
    sqf = g // upoly_gcd(g, g.derivative())
    count = sqf.degree()
    if exclude_zero and g.constant() == g.field.zero:
        count -= 1
    return count

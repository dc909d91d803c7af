"""Hilbert series as exact rational functions N(t) / prod(1 - t^{a_i}),
Riemann-Roch ell-sequences, numerator recovery, and the per-embedding
numerator report.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AmbiguousLowDegree, NumeratorNotPolynomial
from .exactmath import QQ, UPolynomial
from .truncation import graded_piece_basis


def _int_coeffs(num: UPolynomial) -> list[int]:
    out = []
    for c in num.coeffs:
        f = Fraction(c)
        if f.denominator != 1:
            raise ValueError(f"numerator coefficient {c} is not an integer")
        out.append(f.numerator)
    return out


def _check_weights(a) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if not a or any(x < 1 for x in a):
        raise ValueError(f"denominator weights must be positive, got {a}")
    return a


class HilbertSeries:
    """Integer numerator polynomial over the denominator prod(1 - t^{a_i})."""

    def __init__(self, numerator: UPolynomial, denominator_weights):
        self.numerator = numerator
        self.denominator_weights = _check_weights(denominator_weights)
        _int_coeffs(numerator)  # invariant: integer coefficients

    def expand(self, n: int) -> list[int]:
        return expand(self, n)

    def to_string(self) -> str:
        num = self.numerator.to_string("t")
        if " " in num:
            num = f"({num})"
        den = "".join(
            "(1-t)" if a == 1 else f"(1-t^{a})" for a in self.denominator_weights
        )
        return f"{num} / {den}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HilbertSeries)
            and self.numerator == other.numerator
            and self.denominator_weights == other.denominator_weights
        )

    def __repr__(self) -> str:
        return f"HilbertSeries({self.to_string()})"


def expand(s: HilbertSeries, n: int) -> list[int]:
    """Coefficients c_0..c_n of the power series, as exact integers.

    Iterated prefix sums with stride a_i expand each 1/(1-t^{a_i}) factor.
    """
    if n < 0:
        raise ValueError("expansion length must be non-negative")
    num = _int_coeffs(s.numerator)
    c = num[: n + 1] + [0] * max(0, n + 1 - len(num))
    for a in s.denominator_weights:
        for k in range(a, n + 1):
            c[k] += c[k - a]
    return c


class EllSequence:
    """Riemann-Roch dimension sequence ell(nD) for a degree-`divisor_degree`
    divisor on a genus-g curve.

    Above degree 2g-2 the value is forced (n*deg + 1 - g); inside the
    ambiguous range 0 < n*deg <= 2g-2 the caller must supply overrides.
    """

    def __init__(self, genus: int, divisor_degree: int, low_overrides=None):
        if genus < 0:
            raise ValueError("genus must be non-negative")
        if divisor_degree < 1:
            raise ValueError("divisor degree must be positive")
        self.genus = genus
        self.divisor_degree = divisor_degree
        self.low_overrides = dict(low_overrides or {})
        allowed = set(self.ambiguous_range())
        bad = sorted(set(self.low_overrides) - allowed)
        if bad:
            raise ValueError(f"overrides {bad} fall outside the ambiguous range {sorted(allowed)}")
        if any(v < 1 for v in self.low_overrides.values()):
            raise ValueError("ell values are positive")

    def ambiguous_range(self) -> list[int]:
        out = []
        n = 1
        while n * self.divisor_degree <= 2 * self.genus - 2:
            out.append(n)
            n += 1
        return out

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("ell is defined for n >= 0")
        if n == 0:
            return 1
        nd = n * self.divisor_degree
        if nd > 2 * self.genus - 2:
            return nd + 1 - self.genus
        if n in self.low_overrides:
            return self.low_overrides[n]
        raise AmbiguousLowDegree(
            f"ell({n}) with n*deg = {nd} <= 2g-2 = {2 * self.genus - 2} needs an override"
        )

    __call__ = value


def ell(e: EllSequence, n: int) -> int:
    return e.value(n)


def _provider(coeffs):
    if callable(coeffs):
        return coeffs
    seq = list(coeffs)
    return lambda n: seq[n]


def numerator_from_sequence(coeffs, a, max_degree: int) -> UPolynomial:
    """Recover N(t) = (sum c_n t^n) * prod(1 - t^{a_i}) as a polynomial.

    The product is probed up to max_degree + sum(a); any nonzero
    coefficient beyond max_degree raises NumeratorNotPolynomial.
    """
    a = _check_weights(a)
    get = _provider(coeffs)
    horizon = max_degree + sum(a)
    c = [int(get(n)) for n in range(horizon + 1)]
    for ai in a:
        c = [c[k] - (c[k - ai] if k >= ai else 0) for k in range(horizon + 1)]
    for k in range(max_degree + 1, horizon + 1):
        if c[k] != 0:
            raise NumeratorNotPolynomial(
                f"product still has a t^{k} term beyond degree {max_degree}"
            )
    return UPolynomial(QQ, c[: max_degree + 1])


def complete_intersection_series(a, relation_degrees) -> HilbertSeries:
    """Series prod_j(1 - t^{d_j}) / prod_i(1 - t^{a_i})."""
    a = _check_weights(a)
    num = UPolynomial(QQ, [1])
    for d in relation_degrees:
        if d < 1:
            raise ValueError("relation degrees must be positive")
        num = num * UPolynomial(QQ, [1] + [0] * (d - 1) + [-1])
    return HilbertSeries(num, a)


def ci_relation_degrees(num: UPolynomial) -> list[int] | None:
    """Degrees d_j if num = prod(1 - t^{d_j}); None if it does not factor so."""
    if num.is_zero() or Fraction(num.constant()) != 1:
        return None
    out: list[int] = []
    cur = num
    while cur.degree() > 0:
        coeffs = _int_coeffs(cur)
        d = next(k for k in range(1, len(coeffs)) if coeffs[k] != 0)
        if coeffs[d] > 0:
            return None
        factor = UPolynomial(QQ, [1] + [0] * (d - 1) + [-1])
        q, r = divmod(cur, factor)
        if not r.is_zero():
            return None
        out.append(d)
        cur = q
    if _int_coeffs(cur) != [1]:
        return None
    return sorted(out)


def embedding_report(e: EllSequence, rows, max_degree: int | None = None) -> list[dict]:
    """For each (k, weights) row: feed ell(kn) to numerator recovery.

    Reproduces the elliptic truncation table when e is the (g=1, deg=1)
    sequence and rows carry the matching ambient weights.
    """
    report = []
    for k, weights in rows:
        weights = _check_weights(weights)
        bound = max_degree if max_degree is not None else 2 * sum(weights)
        num = numerator_from_sequence(lambda n, k=k: e(k * n), weights, bound)
        report.append(
            {
                "k": k,
                "weights": weights,
                "numerator": num,
                "relation_degrees": ci_relation_degrees(num),
            }
        )
    return report


def generator_discovery(e: EllSequence, max_degree: int) -> tuple[list[dict], list[int]]:
    """Per-degree generator counting: new_n = ell(n) - #(degree-n products).

    Products are monomials in the generators found so far; a negative
    `new` signals a relation in that degree.  Returns (rows, generator
    degrees).
    """
    gens: list[int] = []
    rows = []
    for n in range(1, max_degree + 1):
        have = len(graded_piece_basis(tuple(gens), n))
        need = e(n)
        new = need - have
        if new > 0:
            gens.extend([n] * new)
        rows.append({"degree": n, "products": have, "ell": need, "new": new})
    return rows, gens

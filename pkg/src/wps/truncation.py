"""Graded-piece bases, Veronese (d-th truncation) generators, regrading,
and principal-ideal transforms along well-forming chains.

Grading convention: an element of degree d*i in R has degree i in R^(d).
"""

from __future__ import annotations

from math import gcd, lcm

from .errors import BadCase, BoundTooSmall, NotHomogeneous
from .weights import Weight, WellFormStep, WellFormTrace, check_weight, well_form
from .wpoly import (
    Monomial,
    WPolynomial,
    is_weighted_homogeneous,
    monomial_degree,
    monomial_key,
    monomial_string,
    variable_names,
)

TAG_UNCHANGED = "unchanged-regraded"
TAG_REEXPRESSED = "re-expressed"
TAG_POWER_RAISED = "power-raised"


def graded_piece_basis(a, d: int) -> list[Monomial]:
    """All exponent tuples of weighted degree exactly d, in colex order."""
    a = tuple(int(x) for x in a)
    if d < 0:
        raise ValueError("degree must be non-negative")
    out: list[Monomial] = []

    def rec(i: int, remaining: int, prefix: list[int]) -> None:
        if i == len(a):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for e in range(remaining // a[i] + 1):
            prefix.append(e)
            rec(i + 1, remaining - a[i] * e, prefix)
            prefix.pop()

    rec(0, d, [])
    return sorted(out, key=monomial_key)


def default_degree_bound(a: Weight, d: int) -> int:
    return d * lcm(*a) * len(a)


def _divides(g: Monomial, m: Monomial) -> bool:
    return all(gi <= mi for gi, mi in zip(g, m))


def veronese_generators(a: Weight, d: int, degree_bound: int | None = None) -> list[Monomial]:
    """Minimal generating monomials of {e : weighted degree divisible by d}.

    A monomial is a generator iff no previously found generator divides it;
    scanning degrees upward makes that the monoid-theoretic minimality.
    Completeness is only guaranteed up to degree_bound.
    """
    a = check_weight(a)
    if d < 1:
        raise ValueError("truncation step must be >= 1")
    if degree_bound is None:
        degree_bound = default_degree_bound(a, d)
    if degree_bound < d * max(a):
        raise BoundTooSmall(
            f"degree bound {degree_bound} is below d*max(a) = {d * max(a)}"
        )
    gens: list[Monomial] = []
    for delta in range(d, degree_bound + 1, d):
        for m in graded_piece_basis(a, delta):
            if not any(_divides(g, m) for g in gens):
                gens.append(m)
    return gens


def regraded_degrees(gens: list[Monomial], a: Weight, d: int) -> list[int]:
    """Degrees the generators carry in R^(d)."""
    return [monomial_degree(g, a) // d for g in gens]


def regrade(a: Weight, d: int, case: str, spared_index: int | None = None) -> Weight:
    """New weight vector after a case-I or case-II truncation step."""
    a = check_weight(a)
    if d < 2:
        raise BadCase(f"divisor must be >= 2, got {d}")
    if case == "I":
        if any(x % d for x in a):
            raise BadCase(f"{d} does not divide every entry of {a}")
        return tuple(x // d for x in a)
    if case == "II":
        j = spared_index
        if j is None or not 0 <= j < len(a):
            raise BadCase(f"case II needs a spared index, got {spared_index}")
        if any(x % d for i, x in enumerate(a) if i != j):
            raise BadCase(f"{d} does not divide the complement of index {j} in {a}")
        if gcd(d, a[j]) != 1:
            raise BadCase(f"divisor {d} is not coprime to spared entry {a[j]}")
        return tuple(x if i == j else x // d for i, x in enumerate(a))
    raise BadCase(f"unknown case {case!r}")


def transform_principal_ideal(
    f: WPolynomial, a: Weight, d: int, case: str, spared_index: int | None = None
) -> tuple[WPolynomial, str]:
    """Carry the principal ideal (f) through one truncation step.

    Case I leaves f alone (regraded).  Case II re-expresses f in the new
    generators when every spared exponent is divisible by d (equivalently
    d | deg f); otherwise it returns f^d, which is always re-expressible.
    """
    a = check_weight(a)
    if tuple(f.weight) != a:
        raise ValueError(f"polynomial weight {f.weight} does not match {a}")
    if is_weighted_homogeneous(f) is None:
        raise NotHomogeneous("ideal transform needs a weighted-homogeneous generator")
    new_weight = regrade(a, d, case, spared_index)
    if case == "I":
        return WPolynomial(new_weight, f.field, dict(f.terms)), TAG_UNCHANGED
    j = spared_index
    if all(e[j] % d == 0 for e in f.terms):
        g, tag = f, TAG_REEXPRESSED
    else:
        g, tag = f**d, TAG_POWER_RAISED
    terms = {
        tuple(x // d if i == j else x for i, x in enumerate(e)): c
        for e, c in g.terms.items()
    }
    return WPolynomial(new_weight, f.field, terms), tag


class GradedPresentation:
    """A graded ring presentation: weight, generator names, and relations."""

    def __init__(
        self,
        weight: Weight,
        generator_names: list[str],
        relations: list[WPolynomial],
        relation_degrees: list[int],
    ):
        self.weight = tuple(weight)
        self.generator_names = list(generator_names)
        self.relations = list(relations)
        self.relation_degrees = list(relation_degrees)
        assert len(self.relations) == len(self.relation_degrees)
        for rel, deg in zip(self.relations, self.relation_degrees):
            assert tuple(rel.weight) == self.weight, (rel.weight, self.weight)
            assert is_weighted_homogeneous(rel) == deg, (rel, deg)

    def as_dict(self) -> dict:
        return {
            "weight": list(self.weight),
            "generators": self.generator_names,
            "relations": [r.to_string() for r in self.relations],
            "relation_degrees": self.relation_degrees,
        }

    def __repr__(self) -> str:
        rels = ", ".join(r.to_string() for r in self.relations)
        return f"GradedPresentation(weight={self.weight}, gens={self.generator_names}, relations=[{rels}])"


def straighten_chain(
    f: WPolynomial, a: Weight, prime_steps: bool = False
) -> tuple[GradedPresentation, WellFormTrace]:
    """Well-form the weight and carry the principal ideal (f) along.

    Generator names track what each current variable is as a monomial in
    the original variables (case II replaces the spared generator by its
    d-th power).
    """
    a = check_weight(a)
    if tuple(f.weight) != a:
        raise ValueError(f"polynomial weight {f.weight} does not match {a}")
    if is_weighted_homogeneous(f) is None:
        raise NotHomogeneous("straightening needs a weighted-homogeneous input")
    final_weight, trace = well_form(a, prime_steps)
    n = len(a)
    gen_exponents: list[Monomial] = [
        tuple(1 if k == i else 0 for k in range(n)) for i in range(n)
    ]
    cur = f
    steps: list[WellFormStep] = []
    for step in trace:
        cur, tag = transform_principal_ideal(cur, step.before, step.d, step.case, step.spared)
        if step.case == "II":
            j = step.spared
            gen_exponents[j] = tuple(step.d * x for x in gen_exponents[j])
        steps.append(
            WellFormStep(step.case, step.d, step.spared, step.before, step.after, tag)
        )
    assert tuple(cur.weight) == final_weight
    names = [monomial_string(g, variable_names(n)) for g in gen_exponents]
    degree = is_weighted_homogeneous(cur)
    presentation = GradedPresentation(final_weight, names, [cur], [degree])
    return presentation, WellFormTrace(steps)

"""Weighted plane curves: genericity diagnostics, vertex and singularity
checks, edge squarefreeness, the branching index, and the degree-genus
formula with its Riemann-Hurwitz consistency check.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .errors import (
    DegenerateEdge,
    InvalidDegreeWeight,
    NonIntegerGenus,
    NotAConePoint,
    NotSufficientlyGeneral,
    NotWellFormed,
)
from .exactmath import UPolynomial, distinct_root_count, upoly_gcd
from .weights import Weight, check_weight, is_well_formed
from .wpoly import (
    WPolynomial,
    evaluate,
    is_weighted_homogeneous,
    partial,
    power_substitute,
    restrict_to_edge,
    variable_names,
)
from .errors import NotHomogeneous


class PlaneCurve:
    """A weighted-homogeneous polynomial in three variables, degree cached.

    The defining polynomial is meant to be squarefree; that is not
    machine-checked.
    """

    def __init__(self, poly: WPolynomial):
        if poly.nvars() != 3:
            raise ValueError("plane curves live in three variables")
        d = is_weighted_homogeneous(poly)
        if d is None:
            raise NotHomogeneous("a plane curve needs a weighted-homogeneous polynomial")
        self.poly = poly
        self.weight = poly.weight
        self.degree = d

    def __repr__(self) -> str:
        return f"PlaneCurve({self.poly.to_string()!r}, weight={self.weight}, degree={self.degree})"


def numeric_constraint_violations(d: int, a: Weight) -> list[str]:
    """The degree/weight conditions of the sufficiently-general definition."""
    out = []
    if d < 2:
        out.append(f"d >= 2 fails (d={d})")
    for i, ai in enumerate(a):
        if d < ai:
            out.append(f"d >= a_{i} fails ({d} < {ai})")
    for i, ai in enumerate(a):
        if d % ai != 0:
            if not any(j != i and (d - a[j]) % ai == 0 and d - a[j] >= 0 for j in range(len(a))):
                out.append(f"clause (ii) numeric fails at i={i}: no j with a_{i} | d - a_j")
    return out


def sufficiently_general(c: PlaneCurve) -> tuple[bool, list[str]]:
    """Check the term-presence conditions, naming every violated clause."""
    a = c.weight
    if not is_well_formed(a):
        raise NotWellFormed(f"weight {a} is not well-formed")
    d = c.degree
    names = variable_names(3)
    violations = numeric_constraint_violations(d, a)
    support = c.poly.support()
    for i, ai in enumerate(a):
        if d % ai == 0:
            e = tuple(d // ai if k == i else 0 for k in range(3))
            if e not in support:
                violations.append(f"clause (i) fails at i={i}: missing {names[i]}^{d // ai}")
        else:
            wanted = []
            found = False
            for j in range(3):
                if j == i or (d - a[j]) % ai != 0 or d - a[j] < 0:
                    continue
                m = (d - a[j]) // ai
                e = tuple(
                    (1 if k == j else 0) + (m if k == i else 0) for k in range(3)
                )
                wanted.append(f"{names[j]}*{names[i]}^{m}")
                if e in support:
                    found = True
            if wanted and not found:
                violations.append(
                    f"clause (ii) fails at i={i}: none of {', '.join(wanted)} present"
                )
    return not violations, violations


def vertex_membership(c: PlaneCurve) -> tuple[bool, bool, bool]:
    """Whether each coordinate vertex p_i lies on the curve (a_i does not divide d).

    Cross-checked by evaluating f at the vertices.
    """
    ok, violations = sufficiently_general(c)
    if not ok:
        raise NotSufficientlyGeneral("; ".join(violations))
    out = []
    field = c.poly.field
    for i, ai in enumerate(c.weight):
        claimed = c.degree % ai != 0
        vertex = [field.one if k == i else field.zero for k in range(3)]
        evaluated = evaluate(c.poly, vertex) == field.zero
        assert claimed == evaluated, f"vertex rule disagrees with evaluation at p_{i}"
        out.append(claimed)
    return tuple(out)


def is_singular_at(c: PlaneCurve, coords) -> bool:
    """All three partials vanish at the given affine-cone point."""
    field = c.poly.field
    coords = [field.coerce(x) for x in coords]
    if all(x == field.zero for x in coords):
        raise NotAConePoint("the cone point must be nonzero")
    return all(
        evaluate(partial(c.poly, i), coords) == field.zero for i in range(3)
    )


def straight_cover(c: PlaneCurve) -> PlaneCurve:
    """The curve pi_#(f) in straight projective space, same degree."""
    return PlaneCurve(power_substitute(c.poly))


def _squarefree(g: UPolynomial) -> bool:
    return g.degree() == 0 or upoly_gcd(g, g.derivative()).degree() == 0


def edge_squarefree_check(c: PlaneCurve) -> tuple[bool, list[dict]]:
    """Squarefreeness of the three edge restrictions of the straight cover."""
    cover = straight_cover(c).poly
    rows = []
    for i in range(3):
        g = restrict_to_edge(cover, i)
        if g.is_zero():
            raise DegenerateEdge(f"edge {i} restriction is identically zero")
        rows.append({"i": i, "poly": g, "squarefree": _squarefree(g)})
    return all(r["squarefree"] for r in rows), rows


def branching_index(d: int, a: Weight) -> int:
    """b(pi) = (d-1) sum(a_i - 1) + sum_i (a_i - 1 if a_i | d else a_0a_1a_2 - 1)."""
    a = check_weight(a)
    if len(a) != 3:
        raise InvalidDegreeWeight("the branching index is defined for three weights")
    problems = numeric_constraint_violations(d, a)
    if not is_well_formed(a):
        problems.append(f"weight {a} is not well-formed")
    if problems:
        raise InvalidDegreeWeight("; ".join(problems))
    n = prod(a)
    return (d - 1) * sum(ai - 1 for ai in a) + sum(
        ai - 1 if d % ai == 0 else n - 1 for ai in a
    )


def straight_genus(d: int) -> int:
    """(d-1)(d-2)/2, the straight plane-curve genus."""
    return (d - 1) * (d - 2) // 2


def genus(d: int, a: Weight) -> int:
    """Degree-genus value; raises unless it is a non-negative integer.

    g = ((d-1)(d-2)/2 - (b/2 + 1 - a_0a_1a_2)) / (a_0a_1a_2)
    """
    a = check_weight(a)
    b = branching_index(d, a)
    n = prod(a)
    g = (Fraction((d - 1) * (d - 2), 2) - (Fraction(b, 2) + 1 - n)) / n
    if g.denominator != 1 or g < 0:
        raise NonIntegerGenus(f"genus formula gives {g} for d={d}, a={a}")
    return int(g)


def riemann_hurwitz_check(g_cover: int, g_base: int, deg: int, b: int) -> bool:
    """2 g_cover - 2 = deg (2 g_base - 2) + b."""
    if deg < 1:
        raise ValueError("covering degree must be positive")
    return 2 * g_cover - 2 == deg * (2 * g_base - 2) + b


def branch_census(c: PlaneCurve) -> dict:
    """Distinct-nonzero-root counts per edge of the straight cover versus the
    predicted |G_i| (d if a_i | d else d-1), with disagreement flags.

    Runs on any sufficiently-general curve; non-squarefree edges are
    reported, not rejected.  An identically-zero edge is an error.
    """
    ok, violations = sufficiently_general(c)
    if not ok:
        raise NotSufficientlyGeneral("; ".join(violations))
    cover = straight_cover(c).poly
    d, a = c.degree, c.weight
    edges = []
    for i in range(3):
        g = restrict_to_edge(cover, i)
        if g.is_zero():
            raise DegenerateEdge(f"edge {i} restriction is identically zero")
        count = distinct_root_count(g, exclude_zero=True)
        predicted = d if d % a[i] == 0 else d - 1
        edges.append(
            {
                "i": i,
                "count": count,
                "predicted": predicted,
                "agree": count == predicted,
                "squarefree": _squarefree(g),
            }
        )
    return {
        "d": d,
        "weights": list(a),
        "edges": edges,
        "vertices": list(vertex_membership(c)),
    }


def sweep_instances(max_entry: int = 9, max_degree: int = 60):
    """All (d, a) with a pairwise-coprime non-decreasing, entries <= max_entry,
    d <= max_degree, meeting the numeric sufficiently-general constraints.
    """
    from math import gcd

    for a0 in range(1, max_entry + 1):
        for a1 in range(a0, max_entry + 1):
            if gcd(a0, a1) != 1:
                continue
            for a2 in range(a1, max_entry + 1):
                if gcd(a0, a2) != 1 or gcd(a1, a2) != 1:
                    continue
                a = (a0, a1, a2)
                for d in range(2, max_degree + 1):
                    if not numeric_constraint_violations(d, a):
                        yield d, a


def integrality_sweep(max_entry: int = 9, max_degree: int = 60) -> dict:
    """Run genus + Riemann-Hurwitz over the sweep, collecting failures."""
    checked = 0
    failures = []
    for d, a in sweep_instances(max_entry, max_degree):
        checked += 1
        try:
            g = genus(d, a)
        except NonIntegerGenus as exc:
            failures.append({"d": d, "weights": list(a), "problem": str(exc)})
            continue
        if not riemann_hurwitz_check(straight_genus(d), g, prod(a), branching_index(d, a)):
            failures.append(
                {"d": d, "weights": list(a), "problem": "Riemann-Hurwitz identity fails"}
            )
    return {"checked": checked, "failures": failures}

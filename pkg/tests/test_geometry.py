import random
from fractions import Fraction

import pytest

from wps.errors import Mismatch, NotAConePoint, NotOnPatch, PrimeUnsuitable, Unsupported
from wps.exactmath import FpElem, PrimeField, QQ
from wps.geometry import (
    WPoint,
    cover_project,
    eq_geometric,
    eq_rational,
    normalize,
    orbit,
    patch_equivalent,
    patch_representative,
    roots_of_unity,
    stabilizer_order,
)

F5 = PrimeField(5)
F7 = PrimeField(7)
F13 = PrimeField(13)


def qpt(weight, *coords):
    return WPoint(weight, [Fraction(c) for c in coords])


# === point construction ===


def test_point_basics():
    p = qpt((1, 1, 2), 3, 0, 18)
    assert repr(p) == "|3:0:18|"
    assert p.support() == (0, 2)
    with pytest.raises(NotAConePoint):
        qpt((1, 1), 0, 0)
    with pytest.raises(ValueError):
        WPoint((1, 1, 2), [1, 2])


def test_pair_guards():
    with pytest.raises(Mismatch, match="weights differ"):
        eq_geometric(qpt((1, 1), 1, 1), qpt((1, 2), 1, 1))
    with pytest.raises(Mismatch, match="fields differ"):
        eq_rational(qpt((1, 1), 1, 1), WPoint((1, 1), [1, 1], F5))


# === equality over the rationals ===


def test_eq_weighted_scaling_example():
    p = qpt((1, 1, 2), 1, 0, 2)
    q = qpt((1, 1, 2), 3, 0, 18)
    assert eq_geometric(p, q)
    assert eq_rational(p, q)
    r = qpt((1, 1, 2), 1, 0, 3)
    assert not eq_geometric(p, r)
    assert not eq_rational(p, r)


def test_eq_rational_randomized_scalings():
    rng = random.Random(31)
    for _ in range(60):
        a = tuple(rng.choice([(1, 1, 2), (1, 2, 3), (1, 1)]))
        coords = [Fraction(rng.randrange(-4, 5)) for _ in a]
        # keep a weight-1 anchor nonzero so eq_rational is decidable
        coords[0] = Fraction(rng.randrange(1, 5))
        lam = Fraction(rng.randrange(1, 7), rng.randrange(1, 7))
        p = WPoint(a, coords)
        q = WPoint(a, [lam ** a[i] * c for i, c in enumerate(coords)])
        assert eq_geometric(p, q), (p, q)
        assert eq_rational(p, q), (p, q)


def test_eq_rational_needs_weight_one_anchor():
    p = WPoint((2, 3), [Fraction(1), Fraction(1)])
    q = WPoint((2, 3), [Fraction(4), Fraction(8)])
    with pytest.raises(Unsupported, match="weight 1"):
        eq_rational(p, q)


# === equality over finite fields: geometric vs scaling ===


def test_fp_cone_point_split():
    # z-axis of P(1,1,2) over F_5: equal in the closure, no scalar in F_5
    p = WPoint((1, 1, 2), [0, 0, 1], F5)
    q = WPoint((1, 1, 2), [0, 0, 2], F5)
    assert eq_geometric(p, q)
    assert not eq_rational(p, q)
    r = WPoint((1, 1, 2), [0, 0, 4], F5)
    assert eq_geometric(p, r)
    assert eq_rational(p, r)


def test_fp_scaling_matches_direct_search():
    rng = random.Random(7)
    for _ in range(50):
        a = rng.choice([(1, 1, 2), (1, 2, 3)])
        p_mod = rng.choice([5, 7, 13])
        field = PrimeField(p_mod)
        coords = [rng.randrange(p_mod) for _ in a]
        if not any(coords):
            coords[0] = 1
        x = WPoint(a, coords, field)
        lam = FpElem(rng.randrange(1, p_mod), p_mod)
        y = WPoint(a, [lam ** a[i] * c for i, c in enumerate(x.coords)], field)
        assert eq_rational(x, y)
        assert eq_geometric(x, y)


# === normal forms ===


def test_normalize_rational():
    p, canonical = normalize(qpt((1, 1, 2), 3, 0, 18))
    assert canonical
    assert p == qpt((1, 1, 2), 1, 0, 2)
    q, canonical = normalize(WPoint((2, 3), [Fraction(2), Fraction(5)]))
    assert not canonical
    assert q == WPoint((2, 3), [Fraction(2), Fraction(5)])


def test_normalize_fp_is_orbit_minimum():
    x = WPoint((1, 1), [2, 4], F5)
    rep, canonical = normalize(x)
    assert canonical
    assert rep == WPoint((1, 1), [1, 2], F5)
    y = WPoint((1, 1, 2), [0, 0, 2], F5)
    rep, _ = normalize(y)
    assert rep == WPoint((1, 1, 2), [0, 0, 2], F5), "2 and 3 are the non-squares"
    z = WPoint((1, 1, 2), [0, 0, 4], F5)
    rep, _ = normalize(z)
    assert rep == WPoint((1, 1, 2), [0, 0, 1], F5)


def test_normalize_idempotent_and_orbit_invariant():
    rng = random.Random(11)
    for _ in range(60):
        a = rng.choice([(1, 1, 2), (1, 2, 3)])
        field = PrimeField(rng.choice([5, 7]))
        coords = [rng.randrange(field.p) for _ in a]
        if not any(coords):
            coords[1] = 1
        x = WPoint(a, coords, field)
        rep, _ = normalize(x)
        again, _ = normalize(rep)
        assert again == rep
        lam = FpElem(rng.randrange(1, field.p), field.p)
        moved = WPoint(a, [lam ** a[i] * c for i, c in enumerate(x.coords)], field)
        rep2, _ = normalize(moved)
        assert rep2 == rep


# === the straight cover and the quotient group ===


def test_cover_project():
    y = WPoint((1, 1, 1), [2, 1, 3], F7)
    x = cover_project(y, (1, 2, 3))
    assert x == WPoint((1, 2, 3), [2, 1, 6], F7)
    with pytest.raises(Mismatch, match="weight"):
        cover_project(x, (1, 2, 3))


def test_roots_of_unity():
    assert [r.value for r in roots_of_unity(7, 1)] == [1]
    assert sorted(r.value for r in roots_of_unity(7, 2)) == [1, 6]
    assert sorted(r.value for r in roots_of_unity(7, 3)) == [1, 2, 4]
    assert sorted(r.value for r in roots_of_unity(7, 6)) == [1, 2, 3, 4, 5, 6]
    assert [r.value for r in roots_of_unity(5, 3)] == [1], "gcd(3, 4) = 1"


def test_stabilizer_orbit_frozen():
    a = (1, 2, 3)
    y1 = WPoint((1, 1, 1), [1, 1, 1], F7)
    assert stabilizer_order(y1, a, 7) == 1
    assert len(orbit(y1, a, 7)) == 6
    y2 = WPoint((1, 1, 1), [1, 0, 1], F7)
    assert stabilizer_order(y2, a, 7) == 2
    assert len(orbit(y2, a, 7)) == 3
    y3 = WPoint((1, 1, 1), [0, 1, 0], F7)
    assert stabilizer_order(y3, a, 7) == 6
    assert len(orbit(y3, a, 7)) == 1


def test_orbit_stabilizer_product():
    rng = random.Random(3)
    group_order = 1 * 2 * 3
    for _ in range(30):
        coords = [rng.randrange(7) for _ in range(3)]
        if not any(coords):
            coords[2] = 1
        y = WPoint((1, 1, 1), coords, F7)
        assert stabilizer_order(y, (1, 2, 3), 7) * len(orbit(y, (1, 2, 3), 7)) == group_order


def test_group_needs_suitable_prime():
    y = WPoint((1, 1, 1), [1, 1, 1], F5)
    with pytest.raises(PrimeUnsuitable, match="not 1 mod 3"):
        stabilizer_order(y, (1, 2, 3), 5)
    with pytest.raises(Mismatch):
        stabilizer_order(WPoint((1, 2, 3), [1, 1, 1], F7), (1, 2, 3), 7)


# === affine patches ===


def test_patch_representative_rational():
    x = qpt((1, 1, 2), 3, 6, 18)
    assert patch_representative(x, 0) == [Fraction(2), Fraction(2)]
    with pytest.raises(Unsupported, match="rational patch needs weight 1 at index 2, got 2"):
        patch_representative(x, 2)
    with pytest.raises(NotOnPatch, match="coordinate 1 vanishes; point is not on patch 1"):
        patch_representative(qpt((1, 1, 2), 1, 0, 2), 1)
    with pytest.raises(ValueError, match="out of range"):
        patch_representative(x, 3)


def test_patch_representative_fp():
    x = WPoint((1, 1, 2), [1, 2, 3], F13)
    assert [c.value for c in patch_representative(x, 2)] == [3, 6]
    y = WPoint((1, 1, 2), [0, 0, 3], F5)
    with pytest.raises(Unsupported, match="has no 2-th root in F_5"):
        patch_representative(y, 2)


def test_patch_representative_lands_on_patch():
    rng = random.Random(23)
    for _ in range(40):
        a = (1, 1, 2)
        coords = [rng.randrange(13) for _ in a]
        i = rng.randrange(3)
        coords[i] = rng.randrange(1, 13)
        x = WPoint(a, coords, F13)
        try:
            u = patch_representative(x, i)
        except Unsupported:
            continue
        rebuilt = list(u)
        rebuilt.insert(i, F13.one)
        assert eq_geometric(x, WPoint(a, rebuilt, F13))


def test_patch_equivalent():
    # patch 2 of P(1,1,2): mu^2 acts on the two weight-1 slots
    assert patch_equivalent([10, 7], [3, 6], (1, 1, 2), 2, 13)
    assert not patch_equivalent([5, 5], [3, 6], (1, 1, 2), 2, 13)
    assert patch_equivalent([3, 6], [3, 6], (1, 1, 2), 2, 13)
    with pytest.raises(ValueError, match="need 2 coordinates"):
        patch_equivalent([1], [2, 3], (1, 1, 2), 2, 13)

"""Ideal arithmetic, lattices, classification, and the independent oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltan import (CrossRingError, InfiniteRingError, classify_ideal, colon,
                    enumerate_ideals, ideal_combine, ideal_contains,
                    ideal_from_generators, integer_ideal, integers, modular,
                    poly_quotient, product, radical, special_sets,
                    unit_ideal, zero_ideal)


# ---------------------------------------------------------------------------
# oracles (independent of the bitmask lattice machinery)
# ---------------------------------------------------------------------------

def closure_oracle(ring, gens):
    """Work-list saturation over the public element API."""
    elems = {ring.zero} | set(gens)
    changed = True
    while changed:
        changed = False
        snapshot = list(elems)
        for a in snapshot:
            for b in snapshot:
                if a + b not in elems:
                    elems.add(a + b)
                    changed = True
            for r in ring.list_elements():
                if r * a not in elems:
                    elems.add(r * a)
                    changed = True
    return {e.idx for e in elems}


def rad_int_oracle(n):
    """Product of distinct primes via trial division."""
    if n in (0, 1):
        return n
    out, p = 1, 2
    while n > 1:
        if n % p == 0:
            out *= p
            while n % p == 0:
                n //= p
        p += 1
    return out


# ---------------------------------------------------------------------------
# generators and membership
# ---------------------------------------------------------------------------

def test_generators_z12():
    z12 = modular(12)
    I = ideal_from_generators(z12, [z12.el(4), z12.el(6)])
    assert {e.idx for e in I.elements()} == {0, 2, 4, 6, 8, 10}
    assert {e.idx for e in I.elements()} == closure_oracle(z12, [z12.el(4), z12.el(6)])


def test_generators_poly():
    ring = poly_quotient(4, [0, 0, 0, 1])
    gens = [ring.from_payload((2, 0, 0)), ring.from_payload((0, 1, 0))]
    I = ideal_from_generators(ring, gens)
    assert I.size == 32
    assert {e.idx for e in I.elements()} == closure_oracle(ring, gens)
    # all elements with even constant term
    assert all(e.payload[0] % 2 == 0 for e in I.elements())


def test_empty_generators_give_zero_ideal():
    z6 = modular(6)
    I = ideal_from_generators(z6, [])
    assert I.is_zero and I.size == 1 and repr(I) == "(0)"


def test_contains():
    z12 = modular(12)
    two = ideal_from_generators(z12, [z12.el(2)])
    assert ideal_contains(two, z12.el(8))
    zz = integers()
    assert not integer_ideal(zz, 12).contains(zz.el(8))
    assert zero_ideal(zz).contains(zz.el(0))


def test_cross_ring_membership_rejected():
    z12 = modular(12)
    with pytest.raises(CrossRingError):
        zero_ideal(z12).contains(modular(6).el(0))


# ---------------------------------------------------------------------------
# combine / colon / radical
# ---------------------------------------------------------------------------

def test_integer_combine():
    zz = integers()
    four, six = integer_ideal(zz, 4), integer_ideal(zz, 6)
    assert ideal_combine("sum", four, six).n == 2
    assert ideal_combine("intersect", four, six).n == 12
    assert ideal_combine("product", four, six).n == 24


@settings(max_examples=60)
@given(st.integers(0, 400), st.integers(0, 400), st.integers(-300, 300))
def test_integer_combine_membership(a, b, v):
    zz = integers()
    A, B = integer_ideal(zz, a), integer_ideal(zz, b)
    e = zz.el(v)
    s = ideal_combine("sum", A, B)
    meet = ideal_combine("intersect", A, B)
    if A.contains(e) or B.contains(e):
        assert s.contains(e)
    assert meet.contains(e) == (A.contains(e) and B.contains(e))
    assert ideal_combine("product", A, B).issubset(meet)


def test_finite_intersect():
    z12 = modular(12)
    two = ideal_from_generators(z12, [z12.el(2)])
    three = ideal_from_generators(z12, [z12.el(3)])
    assert {e.idx for e in ideal_combine("intersect", two, three).elements()} == {0, 6}


def test_sum_with_zero_is_identity():
    z12 = modular(12)
    for I in enumerate_ideals(z12):
        assert ideal_combine("sum", I, zero_ideal(z12)) == I


def test_colon_examples():
    z8 = modular(8)
    four = ideal_from_generators(z8, [z8.el(4)])
    assert {e.idx for e in colon(four, z8.el(2)).elements()} == {0, 2, 4, 6}
    for I in enumerate_ideals(z8):
        assert colon(I, z8.one) == I
    zz = integers()
    assert colon(integer_ideal(zz, 12), zz.el(8)).n == 3
    # bounded membership cross-check for (12Z : 8)
    members = {r for r in range(-60, 61) if (r * 8) % 12 == 0}
    assert members == {r for r in range(-60, 61) if r % 3 == 0}


def test_colon_by_ideal():
    z8 = modular(8)
    four = ideal_from_generators(z8, [z8.el(4)])
    two = ideal_from_generators(z8, [z8.el(2)])
    got = colon(four, two)
    expected = {r.idx for r in z8.list_elements()
                if all((r * j).idx in {0, 4} for j in two.elements())}
    assert {e.idx for e in got.elements()} == expected


def test_radical_examples():
    z8 = modular(8)
    assert {e.idx for e in radical(zero_ideal(z8)).elements()} == {0, 2, 4, 6}
    zz = integers()
    assert radical(integer_ideal(zz, 12)).n == rad_int_oracle(12) == 6
    f7 = modular(7)
    assert radical(zero_ideal(f7)).is_zero
    assert radical(unit_ideal(z8)) == unit_ideal(z8)


@settings(max_examples=60)
@given(st.integers(0, 5000))
def test_radical_int_matches_oracle(n):
    zz = integers()
    assert radical(integer_ideal(zz, n)).n == rad_int_oracle(n)


def test_radical_lift_z_n():
    # sqrt(dZ_n) computed elementwise = the ideal generated by rad(d), n <= 64
    for n in range(2, 65):
        ring = modular(n)
        for d in range(1, n + 1):
            if n % d:
                continue
            I = ideal_from_generators(ring, [ring.el(d % n)])
            expected = ideal_from_generators(ring, [ring.el(rad_int_oracle(d) % n)])
            assert radical(I) == expected, (n, d)


# ---------------------------------------------------------------------------
# lattice enumeration and classification
# ---------------------------------------------------------------------------

def test_enumerate_z12():
    sizes = [I.size for I in enumerate_ideals(modular(12))]
    assert sizes == [1, 2, 3, 4, 6, 12]


def test_enumerate_z8_and_field():
    assert len(enumerate_ideals(modular(8))) == 4
    assert len(enumerate_ideals(modular(7))) == 2


def test_enumeration_is_infinite_backend_error():
    with pytest.raises(InfiniteRingError):
        enumerate_ideals(integers())


def test_classify_z12():
    z12 = modular(12)
    three = ideal_from_generators(z12, [z12.el(3)])
    cls = classify_ideal(three)
    assert cls.is_prime and cls.is_maximal and cls.is_primary
    six = ideal_from_generators(z12, [z12.el(6)])
    assert not classify_ideal(six).is_prime


def test_classify_z8_primary_not_prime():
    z8 = modular(8)
    four = ideal_from_generators(z8, [z8.el(4)])
    cls = classify_ideal(four)
    assert cls.is_primary and not cls.is_prime


def test_classify_integer_ideals():
    zz = integers()
    assert classify_ideal(integer_ideal(zz, 7)).is_prime
    assert classify_ideal(integer_ideal(zz, 8)).is_primary
    assert not classify_ideal(integer_ideal(zz, 12)).is_primary
    assert classify_ideal(zero_ideal(zz)).is_superfluous
    assert not classify_ideal(integer_ideal(zz, 7)).is_superfluous
    assert not classify_ideal(unit_ideal(zz)).is_proper


def test_maximal_implies_prime_implies_primary():
    for ring in (modular(12), modular(16), product(modular(2), modular(4)),
                 poly_quotient(4, [0, 0, 1])):
        for I in enumerate_ideals(ring):
            cls = classify_ideal(I)
            if cls.is_maximal:
                assert cls.is_prime
            if cls.is_prime:
                assert cls.is_primary


def test_prime_iff_quotient_domain():
    from deltan import classify_ring, quotient_ring
    for ring in (modular(12), modular(8), product(modular(2), modular(2))):
        for I in enumerate_ideals(ring):
            if not I.is_proper:
                continue
            q = quotient_ring(ring, I).ring
            assert classify_ideal(I).is_prime == classify_ring(q).is_integral_domain


def test_special_sets_z12():
    z12 = modular(12)
    rec = special_sets(z12)
    assert {e.idx for e in rec.nilradical.elements()} == {0, 6}
    assert {e.idx for e in rec.jacobson.elements()} == {0, 6}


def test_special_sets_z6_z_i():
    z6 = modular(6)
    rec = special_sets(z6, zero_ideal(z6))
    assert {e.idx for e in rec.z_i} == {0, 2, 3, 4}


def test_special_sets_field():
    f5 = modular(5)
    rec = special_sets(f5)
    assert rec.nilradical.is_zero
    assert {e.idx for e in rec.zero_divisors} == {0}
    assert {e.idx for e in rec.z_i} == {0}


def test_special_sets_integers():
    zz = integers()
    rec = special_sets(zz, integer_ideal(zz, 6))
    assert rec.nilradical.n == 0 and rec.jacobson.n == 0
    assert zz.el(4) in rec.z_i and zz.el(5) not in rec.z_i
    assert zz.el(3) in rec.z_i
    assert zz.el(7) in rec.regular_elements and zz.el(0) not in rec.regular_elements


# ---------------------------------------------------------------------------
# order-theoretic invariants on a sample of rings
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("ring_factory", [
    lambda: modular(12), lambda: modular(16),
    lambda: poly_quotient(2, [0, 0, 0, 1]),
    lambda: product(modular(2), modular(4)),
])
def test_lattice_invariants(ring_factory):
    ring = ring_factory()
    lattice = enumerate_ideals(ring)
    for I in lattice:
        assert radical(radical(I)) == radical(I)
        for x in ring.list_elements():
            assert I.issubset(colon(I, x))
        for J in lattice:
            meet = ideal_combine("intersect", I, J)
            assert ideal_combine("product", I, J).issubset(meet)
            assert meet.issubset(I)
            assert I.issubset(ideal_combine("sum", I, J))
            assert radical(meet) == ideal_combine("intersect", radical(I), radical(J))

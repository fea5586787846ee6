"""Ring construction, arithmetic, enumeration, and classification."""

import pytest

from deltan import (CrossRingError, InfiniteRingError, InvalidSpecError,
                    arithmetic, check_ring_axioms, classify_element,
                    classify_ring, construct_ring, integers, modular,
                    poly_quotient, product)
from deltan.rings import ModularSpec
from deltan.constructions import idealization, make_module


def test_modular_sizes():
    assert modular(6).size == 6
    assert modular(2).size == 2


def test_poly_quotient_size():
    ring = poly_quotient(4, [0, 0, 0, 1])  # x^3 over Z4, free module basis 1, x, x^2
    assert ring.size == 64


def test_product_size():
    assert product(modular(4), modular(9)).size == 36


def test_construct_ring_is_cached():
    assert construct_ring(ModularSpec(6)) is construct_ring(ModularSpec(6))


def test_modular_arithmetic():
    z6 = modular(6)
    assert arithmetic(z6, "add", z6.el(2), z6.el(3)) == z6.el(5)
    assert arithmetic(z6, "mul", z6.el(2), z6.el(3)) == z6.el(0)
    assert arithmetic(z6, "neg", z6.el(2)) == z6.el(4)


def test_poly_unit_product():
    ring = poly_quotient(4, [0, 0, 0, 1])
    a = ring.from_payload((1, 1, 0))      # 1+x
    b = ring.from_payload((1, 3, 1))      # 1+3x+x^2
    assert a * b == ring.one


def test_idealization_cross_term_vanishes():
    z2 = modular(2)
    rec = idealization(z2, make_module(z2, "regular"))
    a = rec.ring.from_payload((0, 1))
    assert a * a == rec.ring.zero


def test_list_elements():
    z4 = modular(4)
    assert [e.idx for e in z4.list_elements()] == [0, 1, 2, 3]
    z2 = modular(2)
    rec = idealization(z2, make_module(z2, "regular"))
    assert len(rec.ring.list_elements()) == 4
    with pytest.raises(InfiniteRingError):
        integers().list_elements()


def test_cross_ring_rejected():
    with pytest.raises(CrossRingError):
        modular(4).el(1) + modular(6).el(1)


def test_classify_element_z8():
    z8 = modular(8)
    cls = classify_element(z8, z8.el(2))
    assert cls.is_nilpotent and cls.nilpotency_index == 3
    assert cls.is_zero_divisor and not cls.is_unit


def test_classify_element_unit():
    z6 = modular(6)
    cls = classify_element(z6, z6.el(5))
    assert cls.is_unit and cls.is_regular and not cls.is_zero_divisor


def test_classify_element_integers():
    zz = integers()
    cls = classify_element(zz, zz.el(7))
    assert cls.is_regular and not cls.is_unit and not cls.is_nilpotent
    assert classify_element(zz, zz.el(-1)).is_unit


def test_classify_ring_z8():
    rc = classify_ring(modular(8))
    assert rc.is_quasi_local and not rc.is_reduced and not rc.is_field
    assert rc.maximal_ideal.size == 4  # 2Z8


def test_classify_ring_boolean_product():
    rc = classify_ring(product(modular(2), modular(2)))
    assert rc.is_von_neumann_regular and rc.is_boolean
    assert not rc.is_integral_domain and not rc.is_field


def test_classify_ring_field():
    rc = classify_ring(modular(7))
    assert rc.is_field and rc.is_integral_domain and rc.is_reduced
    assert rc.is_von_neumann_regular


def test_classify_ring_integers():
    rc = classify_ring(integers())
    assert rc.is_integral_domain and rc.is_reduced
    assert not (rc.is_field or rc.is_von_neumann_regular or rc.is_quasi_local)


def test_irreducible_poly_gives_field():
    assert classify_ring(poly_quotient(2, [1, 1, 1])).is_field
    assert classify_ring(poly_quotient(3, [1, 0, 1])).is_field


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        modular(1)
    with pytest.raises(InvalidSpecError):
        poly_quotient(4, [1, 2])          # leading coefficient 2 is not a unit mod 4
    with pytest.raises(InvalidSpecError):
        poly_quotient(4, [3])             # degree 0
    with pytest.raises(InvalidSpecError):
        poly_quotient(product(modular(2), modular(2)).spec, [0, 1, 1])


def test_unit_leading_coefficient_normalizes():
    # 3x^2+1 over Z4: 3 is a unit, the modulus normalizes to x^2+3
    ring = poly_quotient(4, [1, 0, 3])
    assert ring.spec.modulus == (3, 0, 1)
    assert ring.size == 16


def test_axiom_check_runs_on_corpus_rings():
    for ring in (modular(12), poly_quotient(2, [0, 0, 1]),
                 product(modular(2), modular(4))):
        check_ring_axioms(ring)


def test_unit_xor_zero_divisor():
    for ring in (modular(12), modular(16), poly_quotient(4, [0, 0, 1]),
                 product(modular(2), modular(4))):
        for a in ring.list_elements():
            cls = classify_element(ring, a)
            assert cls.is_unit != (cls.is_zero or cls.is_zero_divisor)
            assert cls.is_regular == cls.is_unit
            if cls.is_nilpotent:
                assert cls.is_zero or cls.is_zero_divisor


def test_field_implies_vnr_on_sample():
    for n in (2, 3, 5, 7, 11, 13):
        rc = classify_ring(modular(n))
        assert rc.is_field and rc.is_von_neumann_regular


def test_element_payloads_are_canonical():
    ring = poly_quotient(4, [0, 0, 0, 1])
    a = ring.from_payload((2, 1, 3))
    assert a.payload == (2, 1, 3)
    with pytest.raises(InvalidSpecError):
        ring.from_payload((4, 0, 0))      # not reduced mod 4

"""Quotients, modules, idealizations, localizations, homomorphisms."""

import pytest

from deltan import (ConstructionError, HomomorphismError, InfiniteRingError,
                    classify_ring, delta0, delta1, enumerate_ideals,
                    full_expansion, ideal_from_generators, image_ideal,
                    integer_ideal, integers, is_delta_gamma_homomorphism,
                    localize, make_homomorphism, make_module, modular,
                    mult_closure, mult_set, nilradical, poly_quotient,
                    preimage_ideal, product, quotient_ring, radical,
                    zero_ideal)
from deltan.constructions import (MultiplicativeSet, enumerate_submodules,
                                  idealization)


# ---------------------------------------------------------------------------
# quotient rings
# ---------------------------------------------------------------------------

def test_quotient_z12_by_six_is_z6_arithmetic():
    z12 = modular(12)
    six = nilradical(z12)
    rec = quotient_ring(z12, six)
    q = rec.ring
    assert q.size == 6
    z6 = modular(6)
    # reps are 0..5; index map payload -> payload matches Z6's tables
    for a in range(6):
        for b in range(6):
            assert q.elements[q.add[a][b]] == z6.elements[z6.add[a][b]]
            assert q.elements[q.mul[a][b]] == z6.elements[z6.mul[a][b]]
    assert rec.projection.kernel == six


def test_quotient_by_zero_is_bijective_copy():
    z8 = modular(8)
    rec = quotient_ring(z8, zero_ideal(z8))
    assert rec.ring.size == 8
    assert rec.projection.is_injective() and rec.projection.is_surjective()


def test_quotient_poly_by_maximal_is_field():
    ring = poly_quotient(4, [0, 0, 0, 1])
    m = ideal_from_generators(ring, [ring.from_payload((2, 0, 0)),
                                     ring.from_payload((0, 1, 0))])
    assert m.size == 32
    rec = quotient_ring(ring, m)
    assert rec.ring.size == 2
    assert classify_ring(rec.ring).is_field


def test_quotient_by_whole_ring_rejected():
    z6 = modular(6)
    from deltan import unit_ideal
    with pytest.raises(ConstructionError):
        quotient_ring(z6, unit_ideal(z6))


def test_quotient_integers():
    zz = integers()
    rec = quotient_ring(zz, integer_ideal(zz, 6))
    assert rec.ring.key == "Z6"
    assert rec.projection(zz.el(14)).idx == 2
    assert rec.projection.kernel.n == 6
    ident = quotient_ring(zz, zero_ideal(zz))
    assert ident.ring is zz


# ---------------------------------------------------------------------------
# modules and submodules
# ---------------------------------------------------------------------------

def test_regular_module_submodules_are_ideals():
    z8 = modular(8)
    module = make_module(z8, "regular")
    subs = enumerate_submodules(module)
    assert len(subs) == len(enumerate_ideals(z8)) == 4


def test_quotient_module():
    z8 = modular(8)
    four = ideal_from_generators(z8, [z8.el(4)])
    module = make_module(z8, ("quotient", four))
    assert module.size == 4
    assert len(enumerate_submodules(module)) == 3


def test_zero_module_rejected():
    z8 = modular(8)
    from deltan import unit_ideal
    with pytest.raises(ConstructionError):
        make_module(z8, ("quotient", unit_ideal(z8)))


def test_product_module():
    z2 = modular(2)
    module = make_module(z2, ("product", "regular", "regular"))
    assert module.size == 4
    assert len(enumerate_submodules(module)) == 5  # subgroups of Z2 x Z2


def test_modules_over_integers_rejected():
    with pytest.raises(InfiniteRingError):
        make_module(integers(), "regular")


# ---------------------------------------------------------------------------
# idealization
# ---------------------------------------------------------------------------

def test_idealization_radical_formula():
    z2 = modular(2)
    rec = idealization(z2, make_module(z2, "regular"))
    assert rec.ring.size == 4
    rad = radical(zero_ideal(rec.ring))
    assert {e.payload for e in rad.elements()} == {(0, 0), (0, 1)}


def test_homogeneous_ideal_sizes():
    z4 = modular(4)
    module = make_module(z4, "regular")
    rec = idealization(z4, module)
    two = ideal_from_generators(z4, [z4.el(2)])
    full_sub = enumerate_submodules(module)[-1]
    W = rec.homogeneous_ideal(two, full_sub)
    assert W.size == 8
    # I = R with N = M gives the whole ring
    from deltan import unit_ideal
    assert not rec.homogeneous_ideal(unit_ideal(z4), full_sub).is_proper


def test_homogeneous_ideal_requires_im_in_n():
    z4 = modular(4)
    module = make_module(z4, "regular")
    rec = idealization(z4, module)
    two = ideal_from_generators(z4, [z4.el(2)])
    zero_sub = enumerate_submodules(module)[0]
    with pytest.raises(ConstructionError):
        rec.homogeneous_ideal(two, zero_sub)


def test_idealization_has_non_homogeneous_ideals():
    z4 = modular(4)
    rec = idealization(z4, make_module(z4, "regular"))
    non_homog = rec.non_homogeneous_ideals()
    assert non_homog  # e.g. the ideal generated by (2,1)
    for W in non_homog:
        homog, I, N = rec.split(W)
        assert not homog


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------

def test_localize_z12_at_powers_of_four():
    z12 = modular(12)
    rec = localize(z12, MultiplicativeSet(z12, (1, 4)))
    assert rec.ring.size == 3
    assert {e.idx for e in rec.kernel.elements()} == {0, 3, 6, 9}
    assert rec.canonical.kernel == rec.kernel


def test_localize_at_one_is_isomorphic_copy():
    z6 = modular(6)
    rec = localize(z6, MultiplicativeSet(z6, (1,)))
    assert rec.ring.size == 6
    assert rec.canonical.is_injective() and rec.canonical.is_surjective()


def test_localize_at_units_is_bijective():
    z6 = modular(6)
    rec = localize(z6, MultiplicativeSet(z6, (1, 5)))
    assert rec.canonical.is_injective() and rec.canonical.is_surjective()


def test_extend_contract():
    z12 = modular(12)
    rec = localize(z12, MultiplicativeSet(z12, (1, 4)))
    zero_ext = rec.extend(zero_ideal(z12))
    assert zero_ext.is_zero
    assert {e.idx for e in rec.contract(zero_ext).elements()} == {0, 3, 6, 9}


def test_multiplicative_set_validation():
    z12 = modular(12)
    with pytest.raises(ConstructionError):
        MultiplicativeSet(z12, (1, 2))   # 2*2 = 4 escapes
    with pytest.raises(ConstructionError):
        MultiplicativeSet(z12, (4,))     # missing 1
    closed = mult_closure(z12, [z12.el(2)])
    assert set(closed.indices) == {1, 2, 4, 8}
    with pytest.raises(ConstructionError):
        localize(z12, mult_closure(z12, [z12.el(6)]))  # 0 lands in S


def test_mult_set_constructor():
    z12 = modular(12)
    s = mult_set(z12, [z12.el(4)])
    assert set(s.indices) == {1, 4}


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

def test_projection_preimage_is_kernel():
    z12 = modular(12)
    six = nilradical(z12)
    rec = quotient_ring(z12, six)
    pre = preimage_ideal(rec.projection, zero_ideal(rec.ring))
    assert pre == six


def test_diagonal_embedding():
    z2 = modular(2)
    ring = product(z2, z2)
    f = make_homomorphism(z2, ring, lambda a: ring.from_payload((a.payload, a.payload)))
    assert f.is_injective() and not f.is_surjective()
    right = ideal_from_generators(ring, [ring.from_payload((1, 0))])
    assert preimage_ideal(f, right).is_zero


def test_identity_hom_transport():
    z12 = modular(12)
    ident = make_homomorphism(z12, z12, list(range(12)))
    for I in enumerate_ideals(z12):
        assert image_ideal(ident, I) == I
        assert preimage_ideal(ident, I) == I


def test_invalid_map_rejected():
    z4, z2 = modular(4), modular(2)
    with pytest.raises(HomomorphismError):
        make_homomorphism(z4, z2, [0, 1, 1, 0])  # not additive (1+1 -> 1+1=0 vs 2->1)
    with pytest.raises(HomomorphismError):
        make_homomorphism(z4, z2, [0, 0, 0, 0])  # 1 not sent to 1


def test_image_ideal_requires_surjective():
    z2 = modular(2)
    ring = product(z2, z2)
    f = make_homomorphism(z2, ring, lambda a: ring.from_payload((a.payload, a.payload)))
    with pytest.raises(HomomorphismError):
        image_ideal(f, zero_ideal(z2))


def test_delta_gamma_homomorphism():
    z12 = modular(12)
    six = nilradical(z12)
    rec = quotient_ring(z12, six)
    # radical expansions along any homomorphism
    assert is_delta_gamma_homomorphism(rec.projection, delta1(z12), delta1(rec.ring))
    # identity expansions along a projection
    assert is_delta_gamma_homomorphism(rec.projection, delta0(z12), delta0(rec.ring))
    # full on the source vs identity on the target fails
    z8 = modular(8)
    four = ideal_from_generators(z8, [z8.el(4)])
    rec8 = quotient_ring(z8, four)
    assert not is_delta_gamma_homomorphism(rec8.projection, full_expansion(z8),
                                           delta0(rec8.ring))


def test_delta_gamma_integers_reduction():
    zz = integers()
    rec = quotient_ring(zz, integer_ideal(zz, 6))
    assert is_delta_gamma_homomorphism(rec.projection, delta1(zz), delta1(rec.ring))
    assert is_delta_gamma_homomorphism(rec.projection, delta0(zz), delta0(rec.ring))

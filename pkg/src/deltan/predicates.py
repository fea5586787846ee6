"""Ideal-class predicates: delta-primary, n-ideal, delta-n-ideal, spectra.

A proper ideal I is delta-n when ab in I with a outside the nilradical forces
b into delta(I).  Four equivalent decision methods are provided (they are
asserted to agree by the verifier): the definition scan, the colon criterion
((I:a) inside the nilradical for a outside delta(I)), the element/ideal form,
and the ideal-pair form.  All finite decisions are exhaustive; the integer
backend uses the exact closed criterion (nZ is delta-n iff n = 0 or
delta(nZ) = ZZ, since n*1 lands in nZ with n outside the nilradical).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CrossRingError, ImproperIdealError
from .ideals import (_bits, _colon_mask, _product_mask, enumerate_ideals,
                     nilradical, zero_ideal)
from .expansions import apply_expansion

DELTA_N_METHODS = ("definition", "colon_criterion", "element_ideal", "ideal_pairs")


def _guard(I, delta=None):
    if delta is not None and delta.ring.key != I.ring.key:
        raise CrossRingError("ideal and expansion live in different rings")
    if not I.is_proper:
        raise ImproperIdealError(
            "this ideal class is defined for proper ideals only; got the whole ring")


def _nil_mask(ring):
    hit = ring._cache.get("nilmask")
    if hit is None:
        hit = nilradical(ring).mask
        ring._cache["nilmask"] = hit
    return hit


def _aj_mask(ring, a, jmask):
    cache = ring._cache.setdefault("ajmask", {})
    key = (a, jmask)
    hit = cache.get(key)
    if hit is None:
        row = ring.mul[a]
        hit = 0
        for j in _bits(jmask):
            hit |= 1 << row[j]
        cache[key] = hit
    return hit


# ---------------------------------------------------------------------------
# delta-primary and n-ideal
# ---------------------------------------------------------------------------

def is_delta_primary(I, delta):
    """ab in I and a outside I force b into delta(I)."""
    _guard(I, delta)
    return delta_primary_witness(I, delta) is None


def delta_primary_witness(I, delta):
    """First (a, b) violating the delta-primary condition, or None."""
    _guard(I, delta)
    ring = I.ring
    if not ring.is_finite:
        n, d = I.n, delta.int_fn(I.n)
        if n == 0 or d == 1:
            return None
        # primary fails iff some prime s of n is not divisible by d; then
        # (n/s) * s lands in nZ with n/s outside nZ and s outside dZ
        for s in sorted(_factor_exponents(n)):
            if s % d != 0:
                return (ring.el(n // s), ring.el(s))
        return None
    imask, dmask = I.mask, delta.table[I.mask]
    mul = ring.mul
    for a in range(ring.size):
        if imask >> a & 1:
            continue
        row = mul[a]
        for b in range(ring.size):
            if imask >> row[b] & 1 and not (dmask >> b & 1):
                return (ring.el(a), ring.el(b))
    return None


def _factor_exponents(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_n_ideal(I):
    """ab in I forces a into the nilradical or b into I."""
    _guard(I)
    return n_ideal_witness(I) is None


def n_ideal_witness(I):
    _guard(I)
    ring = I.ring
    if not ring.is_finite:
        if I.n == 0:
            return None
        return (ring.el(I.n), ring.el(1))
    return _definition_witness(ring, I.mask, I.mask)


def _definition_witness(ring, imask, dmask):
    """First (a, b) with ab in I, a not nilpotent, b outside the target set."""
    nil = _nil_mask(ring)
    mul = ring.mul
    for a in range(ring.size):
        if nil >> a & 1:
            continue
        row = mul[a]
        for b in range(ring.size):
            if imask >> row[b] & 1 and not (dmask >> b & 1):
                return (ring.el(a), ring.el(b))
    return None


# ---------------------------------------------------------------------------
# delta-n-ideal, four ways
# ---------------------------------------------------------------------------

def is_delta_n_ideal(I, delta, method="definition"):
    """Decide the delta-n property by the requested method (default: definition)."""
    _guard(I, delta)
    if method not in DELTA_N_METHODS:
        raise ValueError(f"unknown decision method {method!r}")
    ring = I.ring
    if not ring.is_finite:
        return I.n == 0 or delta.int_fn(I.n) == 1
    key = (I.mask, method)
    hit = delta._dn_cache.get(key)
    if hit is None:
        hit = _decide(ring, I.mask, delta, method)
        delta._dn_cache[key] = hit
    return hit


def _decide(ring, imask, delta, method):
    dmask = delta.table[imask]
    nil = _nil_mask(ring)
    n = ring.size
    if method == "definition":
        return _definition_witness(ring, imask, dmask) is None
    if method == "colon_criterion":
        for a in range(n):
            if not (dmask >> a & 1) and _colon_mask(ring, imask, a) & ~nil:
                return False
        return True
    if method == "element_ideal":
        lattice = enumerate_ideals(ring)
        for a in range(n):
            if nil >> a & 1:
                continue
            for J in lattice:
                if _aj_mask(ring, a, J.mask) & ~imask == 0 and J.mask & ~dmask:
                    return False
        return True
    # ideal_pairs: JK <= I forces J inside the nilradical or K inside delta(I)
    lattice = enumerate_ideals(ring)
    for J in lattice:
        j_nil = J.mask & ~nil == 0
        for K in lattice:
            if _product_mask(ring, J.mask, K.mask) & ~imask == 0:
                if not j_nil and K.mask & ~dmask:
                    return False
    return True


def delta_n_witness(I, delta):
    """First (a, b) violating the delta-n definition, or None."""
    _guard(I, delta)
    ring = I.ring
    if not ring.is_finite:
        if I.n == 0 or delta.int_fn(I.n) == 1:
            return None
        return (ring.el(I.n), ring.el(1))
    return _definition_witness(ring, I.mask, delta.table[I.mask])


def is_quasi_n_ideal(I):
    """delta-n for the radical expansion."""
    _guard(I)
    from .expansions import delta1
    return is_delta_n_ideal(I, delta1(I.ring))


def quasi_n_witness(I):
    _guard(I)
    from .expansions import delta1
    return delta_n_witness(I, delta1(I.ring))


# ---------------------------------------------------------------------------
# spectra and delta-nilpotents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaNSpectrum:
    all: tuple
    maximal_members: tuple


def delta_n_spectrum(ring, delta):
    """All proper delta-n ideals plus the maximal members under inclusion."""
    if not ring.is_finite:
        raise CrossRingError("spectra are enumerated on finite rings only")
    if delta.ring.key != ring.key:
        raise CrossRingError("expansion lives on a different ring")
    members = tuple(I for I in enumerate_ideals(ring)
                    if I.is_proper and is_delta_n_ideal(I, delta))
    maximal = tuple(
        I for I in members
        if not any(J is not I and I.mask != J.mask and I.mask & ~J.mask == 0
                   for J in members))
    return DeltaNSpectrum(all=members, maximal_members=maximal)


def delta_nilpotents(ring, delta):
    """The element set of delta(zero ideal)."""
    if delta.ring.key != ring.key:
        raise CrossRingError("expansion lives on a different ring")
    value = apply_expansion(delta, zero_ideal(ring))
    if ring.is_finite:
        return frozenset(value.elements())
    if value.n == 0:
        return frozenset({ring.el(0)})
    from .ideals import IntegerSet
    return IntegerSet(f"multiples of {value.n}",
                      lambda v, n=value.n: v % n == 0)

"""Derived rings and their canonical maps: quotients, idealizations, localizations.

Also houses finite unitary modules (for idealizations), multiplicative sets,
and validated ring homomorphisms with ideal image/preimage transport.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (ConstructionError, CrossRingError, HomomorphismError,
                     InfiniteRingError, InvalidSpecError)
from .ideals import (Ideal, _bits, _full_mask, _mk_ideal, enumerate_ideals,
                     integer_ideal)
from .rings import (Element, IdealizationSpec, LocalizationSpec, QuotientSpec,
                    Ring, construct_ring, modular, register_ring)


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegularModuleSpec:
    def key(self):
        return "regular"


@dataclass(frozen=True)
class QuotientModuleSpec:
    ideal_elems: tuple

    def key(self):
        return "quot[" + ",".join(str(i) for i in self.ideal_elems) + "]"


@dataclass(frozen=True)
class ProductModuleSpec:
    left: object
    right: object

    def key(self):
        return f"prod({self.left.key()},{self.right.key()})"


class Module:
    """A finite unitary module over a finite ring, with a validated action table."""

    def __init__(self, ring, spec, elements, add, action, zero, repr_fn):
        self.ring = ring
        self.spec = spec
        self.key = f"{ring.key}(+){spec.key()}"
        self.elements = elements
        self.add = add
        self.action = action  # action[r_idx][m_idx] -> m_idx
        self.zero_idx = zero
        self._repr_fn = repr_fn
        self._cache = {}
        self.base_to_module = None  # base-ring index -> module index, when meaningful
        self.neg = [None] * len(elements)
        for i, row in enumerate(add):
            for j, s in enumerate(row):
                if s == zero:
                    self.neg[i] = j
                    break
        _check_module_axioms(self)

    @property
    def size(self):
        return len(self.elements)

    def act(self, r_idx, m_idx):
        return self.action[r_idx][m_idx]

    def element_repr(self, idx):
        return self._repr_fn(self.elements[idx]) if self._repr_fn else str(self.elements[idx])

    def __repr__(self):
        return f"Module({self.key})"


def _check_module_axioms(module):
    ring = module.ring
    n, m = ring.size, module.size
    add, act = module.add, module.action
    radd, rmul = ring.add, ring.mul
    zero = module.zero_idx
    for i in range(m):
        if add[zero][i] != i:
            raise ConstructionError(f"{module.key}: 0 is not an additive identity")
        if module.neg[i] is None:
            raise ConstructionError(f"{module.key}: missing additive inverse")
        if act[ring.one_idx][i] != i:
            raise ConstructionError(f"{module.key}: action is not unital")
        for j in range(i, m):
            if add[i][j] != add[j][i]:
                raise ConstructionError(f"{module.key}: addition is not commutative")
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if add[add[i][j]][k] != add[i][add[j][k]]:
                    raise ConstructionError(f"{module.key}: addition is not associative")
    for r in range(n):
        for i in range(m):
            for j in range(m):
                if act[r][add[i][j]] != add[act[r][i]][act[r][j]]:
                    raise ConstructionError(f"{module.key}: action not additive in m")
        for s in range(n):
            for i in range(m):
                if act[radd[r][s]][i] != add[act[r][i]][act[s][i]]:
                    raise ConstructionError(f"{module.key}: action not additive in r")
                if act[rmul[r][s]][i] != act[r][act[s][i]]:
                    raise ConstructionError(f"{module.key}: action not associative")


def make_module(ring, spec):
    """Build the regular module, a quotient module R/I, or a product of modules."""
    if not ring.is_finite:
        raise InfiniteRingError("modules are supported over finite rings only")
    spec = _normalize_module_spec(ring, spec)
    cache = ring._cache.setdefault("modules", {})
    hit = cache.get(spec.key())
    if hit is not None:
        return hit
    if isinstance(spec, RegularModuleSpec):
        module = Module(ring, spec, list(ring.elements),
                        [row[:] for row in ring.add],
                        [row[:] for row in ring.mul],
                        ring.zero_idx, ring._repr_fn)
        module.base_to_module = list(range(ring.size))
    elif isinstance(spec, QuotientModuleSpec):
        mask = 0
        for i in spec.ideal_elems:
            mask |= 1 << i
        if mask == _full_mask(ring):
            raise ConstructionError("quotient by the whole ring gives the zero module")
        repmap = _coset_reps(ring, mask)
        reps = sorted(set(repmap))
        qidx = {r: k for k, r in enumerate(reps)}
        elems = [ring.elements[r] for r in reps]
        add = [[qidx[repmap[ring.add[a][b]]] for b in reps] for a in reps]
        action = [[qidx[repmap[ring.mul[r][b]]] for b in reps] for r in range(ring.size)]
        module = Module(ring, spec, elems, add, action,
                        qidx[repmap[ring.zero_idx]], ring._repr_fn)
        module.base_to_module = [qidx[repmap[i]] for i in range(ring.size)]
    elif isinstance(spec, ProductModuleSpec):
        m1 = make_module(ring, spec.left)
        m2 = make_module(ring, spec.right)
        s2 = m2.size
        elems = [(a, b) for a in m1.elements for b in m2.elements]
        size = m1.size * s2
        add = [[m1.add[i // s2][j // s2] * s2 + m2.add[i % s2][j % s2]
                for j in range(size)] for i in range(size)]
        action = [[m1.action[r][i // s2] * s2 + m2.action[r][i % s2]
                   for i in range(size)] for r in range(ring.size)]

        def pair_repr(p):
            return f"({m1._repr_fn(p[0]) if m1._repr_fn else p[0]}," \
                   f"{m2._repr_fn(p[1]) if m2._repr_fn else p[1]})"

        module = Module(ring, spec, elems, add, action,
                        m1.zero_idx * s2 + m2.zero_idx, pair_repr)
    else:
        raise InvalidSpecError(f"unknown module spec {spec!r}")
    cache[spec.key()] = module
    return module


def _normalize_module_spec(ring, spec):
    if spec == "regular" or isinstance(spec, RegularModuleSpec):
        return RegularModuleSpec()
    if isinstance(spec, (QuotientModuleSpec, ProductModuleSpec)):
        return spec
    if isinstance(spec, tuple) and spec and spec[0] == "quotient":
        ideal = spec[1]
        if isinstance(ideal, Ideal):
            if ideal.ring.key != ring.key:
                raise CrossRingError("quotient-module ideal lives in a different ring")
            return QuotientModuleSpec(tuple(_bits(ideal.mask)))
        return QuotientModuleSpec(tuple(sorted(ideal)))
    if isinstance(spec, tuple) and spec and spec[0] == "product":
        return ProductModuleSpec(_normalize_module_spec(ring, spec[1]),
                                 _normalize_module_spec(ring, spec[2]))
    raise InvalidSpecError(f"unknown module spec {spec!r}")


def _coset_reps(ring, mask):
    """repmap[i] = least element index in the coset i + (mask)."""
    add = ring.add
    bits = _bits(mask)
    repmap = [None] * ring.size
    for i in range(ring.size):
        if repmap[i] is None:
            coset = sorted(add[i][j] for j in bits)
            rep = coset[0]
            for c in coset:
                repmap[c] = rep
    return repmap


class Submodule:
    """A submodule given by its canonical element mask."""

    __slots__ = ("module", "mask")

    def __init__(self, module, mask):
        self.module = module
        self.mask = mask

    @property
    def size(self):
        return self.mask.bit_count()

    def contains_idx(self, idx):
        return bool(self.mask >> idx & 1)

    def element_indices(self):
        return _bits(self.mask)

    def __eq__(self, other):
        return (isinstance(other, Submodule) and other.module.key == self.module.key
                and other.mask == self.mask)

    def __hash__(self):
        return hash((self.module.key, self.mask))

    def __repr__(self):
        elems = ", ".join(self.module.element_repr(i) for i in _bits(self.mask))
        return f"<{elems}>"


def enumerate_submodules(module):
    """All submodules: closure of the cyclic submodules under pairwise sum."""
    cached = module._cache.get("submodules")
    if cached is not None:
        return cached
    add, act = module.add, module.action
    n = module.ring.size

    def addclose(a_mask, b_mask):
        out = 0
        for i in _bits(a_mask):
            row = add[i]
            for j in _bits(b_mask):
                out |= 1 << row[j]
        return out

    cyclic = set()
    for m in range(module.size):
        mask = 0
        for r in range(n):
            mask |= 1 << act[r][m]
        cyclic.add(mask)
    cyclic = sorted(cyclic)
    seen = {1 << module.zero_idx}
    seen.update(cyclic)
    frontier = sorted(seen)
    while frontier:
        fresh = []
        for a in frontier:
            for c in cyclic:
                s = addclose(a, c)
                if s not in seen:
                    seen.add(s)
                    fresh.append(s)
        frontier = fresh
    out = tuple(Submodule(module, m)
                for m in sorted(seen, key=lambda m: (m.bit_count(), m)))
    module._cache["submodules"] = out
    return out


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

class Homomorphism:
    """A validated unital ring homomorphism with ideal transport helpers."""

    def __init__(self, source, target, mapping=None, int_fn=None, kernel=None,
                 check=True):
        self.source = source
        self.target = target
        self.mapping = mapping
        self.int_fn = int_fn
        self._kernel = kernel
        if mapping is not None and check:
            self._validate()

    def _validate(self):
        src, tgt, f = self.source, self.target, self.mapping
        if len(f) != src.size:
            raise HomomorphismError("map must be total on the source elements")
        if f[src.one_idx] != tgt.one_idx:
            raise HomomorphismError("map does not send 1 to 1")
        if f[src.zero_idx] != tgt.zero_idx:
            raise HomomorphismError("map does not send 0 to 0")
        for a in range(src.size):
            for b in range(src.size):
                if f[src.add[a][b]] != tgt.add[f[a]][f[b]]:
                    raise HomomorphismError("map does not preserve addition")
                if f[src.mul[a][b]] != tgt.mul[f[a]][f[b]]:
                    raise HomomorphismError("map does not preserve multiplication")

    def apply(self, a):
        if a.ring.key != self.source.key:
            raise CrossRingError("element does not belong to the source ring")
        if self.mapping is not None:
            return Element(self.target, self.mapping[a.idx])
        return Element(self.target, self.int_fn(a.idx))

    __call__ = apply

    @property
    def kernel(self):
        if self._kernel is None:
            mask = 0
            for i, v in enumerate(self.mapping):
                if v == self.target.zero_idx:
                    mask |= 1 << i
            self._kernel = _mk_ideal(self.source, mask)
        return self._kernel

    def is_surjective(self):
        if self.mapping is None:
            return True  # only the mod-n reductions are built in closed form
        return len(set(self.mapping)) == self.target.size

    def is_injective(self):
        if self.mapping is None:
            return False
        return len(set(self.mapping)) == self.source.size

    def image_mask(self, src_mask):
        out = 0
        for i in _bits(src_mask):
            out |= 1 << self.mapping[i]
        return out

    def preimage_mask(self, tgt_mask):
        out = 0
        for i, v in enumerate(self.mapping):
            if tgt_mask >> v & 1:
                out |= 1 << i
        return out

    def __repr__(self):
        return f"Homomorphism({self.source.key} -> {self.target.key})"


def make_homomorphism(source, target, mapping):
    """Validate and wrap a total element map as a homomorphism.

    ``mapping`` may be a callable on elements, a dict keyed by source
    elements, or a list of target elements/indices in enumeration order.
    """
    if not source.is_finite:
        raise InfiniteRingError("explicit maps need a finite source; use quotient_ring "
                                "for the mod-n reductions")
    table = []
    for a in source.list_elements():
        if callable(mapping):
            v = mapping(a)
        elif isinstance(mapping, dict):
            v = mapping[a]
        else:
            v = mapping[a.idx]
        table.append(v.idx if isinstance(v, Element) else int(v))
    return Homomorphism(source, target, mapping=table)


def image_ideal(f, I):
    """f(I) as an ideal of the target; requires f surjective."""
    if I.ring.key != f.source.key:
        raise CrossRingError("ideal does not live in the source ring")
    if not f.is_surjective():
        raise HomomorphismError("image_ideal requires a surjective homomorphism")
    return _mk_ideal(f.target, f.image_mask(I.mask))


def preimage_ideal(f, K):
    """f^{-1}(K) as an ideal of the source (always an ideal)."""
    if K.ring.key != f.target.key:
        raise CrossRingError("ideal does not live in the target ring")
    if f.mapping is not None:
        return _mk_ideal(f.source, f.preimage_mask(K.mask))
    if not f.target.is_finite:
        return K  # identity reduction ZZ -> ZZ
    # mod-n reduction: the preimage of the subgroup dZ_n is dZ
    payloads = sorted(f.target.elements[i] for i in _bits(K.mask))
    d = payloads[1] if len(payloads) > 1 else f.kernel.n
    return integer_ideal(f.source, d)


def is_delta_gamma_homomorphism(f, delta, gamma):
    """delta(f^{-1}(J)) = f^{-1}(gamma(J)) for every ideal J of the target."""
    if delta.ring.key != f.source.key or gamma.ring.key != f.target.key:
        raise CrossRingError("expansions must live on the map's source and target")
    from .expansions import apply_expansion
    for J in enumerate_ideals(f.target):
        pre = preimage_ideal(f, J)
        lhs = apply_expansion(delta, pre)
        rhs = preimage_ideal(f, apply_expansion(gamma, J))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# quotient rings
# ---------------------------------------------------------------------------

@dataclass
class QuotientRecord:
    ring: Ring
    projection: Homomorphism


def quotient_ring(ring, J):
    """R/J with the canonical projection; coset reps are least in base order."""
    if J.ring.key != ring.key:
        raise CrossRingError("ideal lives in a different ring")
    if not J.is_proper:
        raise ConstructionError("cannot quotient by the whole ring")
    if not ring.is_finite:
        n = J.n
        if n == 0:
            ident = Homomorphism(ring, ring, int_fn=lambda v: v,
                                 kernel=integer_ideal(ring, 0))
            return QuotientRecord(ring=ring, projection=ident)
        target = modular(n)
        proj = Homomorphism(ring, target, int_fn=lambda v, n=n: v % n,
                            kernel=integer_ideal(ring, n))
        return QuotientRecord(ring=target, projection=proj)
    cache = ring._cache.setdefault("quotients", {})
    hit = cache.get(J.mask)
    if hit is not None:
        return hit
    repmap = _coset_reps(ring, J.mask)
    reps = sorted(set(repmap))
    qidx = {r: k for k, r in enumerate(reps)}
    elems = [ring.elements[r] for r in reps]
    add = [[qidx[repmap[ring.add[a][b]]] for b in reps] for a in reps]
    mul = [[qidx[repmap[ring.mul[a][b]]] for b in reps] for a in reps]
    spec = QuotientSpec(ring.spec, tuple(_bits(J.mask)))
    qring = Ring(spec, elements=elems, add=add, mul=mul,
                 zero=qidx[repmap[ring.zero_idx]], one=qidx[repmap[ring.one_idx]],
                 repr_fn=ring._repr_fn or str)
    qring.origin = ("quotient", ring, J)
    register_ring(qring)
    proj = Homomorphism(ring, qring, mapping=[qidx[repmap[i]] for i in range(ring.size)],
                        check=False)
    rec = QuotientRecord(ring=qring, projection=proj)
    cache[J.mask] = rec
    return rec


# ---------------------------------------------------------------------------
# idealization R(+)M
# ---------------------------------------------------------------------------

class IdealizationRecord:
    def __init__(self, ring, base, module):
        self.ring = ring
        self.base = base
        self.module = module

    def homogeneous_ideal(self, I, N):
        """The ideal I(+)N of R(+)M; valid exactly when I*M lies inside N."""
        if I.ring.key != self.base.key:
            raise CrossRingError("ideal lives in a different ring")
        if N.module.key != self.module.key:
            raise CrossRingError("submodule belongs to a different module")
        act = self.module.action
        for a in _bits(I.mask):
            row = act[a]
            for m in range(self.module.size):
                if not N.contains_idx(row[m]):
                    raise ConstructionError(
                        "I(+)N is an ideal of R(+)M only when IM lies inside N")
        msize = self.module.size
        mask = 0
        for a in _bits(I.mask):
            base = a * msize
            for m in _bits(N.mask):
                mask |= 1 << (base + m)
        return _mk_ideal(self.ring, mask)

    def split(self, W):
        """(is_homogeneous, I, N) for an ideal W of R(+)M."""
        if W.ring.key != self.ring.key:
            raise CrossRingError("ideal lives in a different idealization")
        msize = self.module.size
        pr = 0
        nm = 0
        zblock = self.base.zero_idx * msize
        for idx in _bits(W.mask):
            pr |= 1 << (idx // msize)
            if idx // msize == self.base.zero_idx:
                nm |= 1 << (idx - zblock)
        rebuilt = 0
        for a in _bits(pr):
            for m in _bits(nm):
                rebuilt |= 1 << (a * msize + m)
        I = _mk_ideal(self.base, pr)
        N = Submodule(self.module, nm)
        return (rebuilt == W.mask, I, N)

    def non_homogeneous_ideals(self):
        """Lattice ideals that are not of the I(+)N shape (flagged in reports)."""
        out = []
        for W in enumerate_ideals(self.ring):
            homog, _, _ = self.split(W)
            if not homog:
                out.append(W)
        return tuple(out)


def idealization(ring, module):
    """The ring on pairs (r, m) with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)."""
    if not ring.is_finite:
        raise InfiniteRingError("idealization is supported over finite rings only")
    if module.ring.key != ring.key:
        raise CrossRingError("module is defined over a different ring")
    cache = ring._cache.setdefault("idealizations", {})
    hit = cache.get(module.key)
    if hit is not None:
        return hit
    msize = module.size
    size = ring.size * msize
    elems = [(ring.elements[r], module.elements[m])
             for r in range(ring.size) for m in range(msize)]
    radd, rmul = ring.add, ring.mul
    madd, act = module.add, module.action
    add = [[radd[i // msize][j // msize] * msize + madd[i % msize][j % msize]
            for j in range(size)] for i in range(size)]
    mul = [[rmul[i // msize][j // msize] * msize
            + madd[act[i // msize][j % msize]][act[j // msize][i % msize]]
            for j in range(size)] for i in range(size)]

    rrepr = ring._repr_fn or str
    mrepr = module._repr_fn or str

    def pair_repr(p):
        return f"({rrepr(p[0])},{mrepr(p[1])})"

    spec = IdealizationSpec(ring.spec, module.spec)
    izr = Ring(spec, elements=elems, add=add, mul=mul,
               zero=ring.zero_idx * msize + module.zero_idx,
               one=ring.one_idx * msize + module.zero_idx,
               repr_fn=pair_repr)
    izr.origin = ("idealization", ring, module)
    register_ring(izr)
    rec = IdealizationRecord(izr, ring, module)
    cache[module.key] = rec
    return rec


# ---------------------------------------------------------------------------
# localization S^{-1} R
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicativeSet:
    ring: Ring
    indices: tuple

    def __post_init__(self):
        ring = self.ring
        if not ring.is_finite:
            raise InfiniteRingError("multiplicative sets are finite-ring data here")
        idx = set(self.indices)
        if ring.one_idx not in idx:
            raise ConstructionError("a multiplicative set must contain 1")
        for a in idx:
            for b in idx:
                if ring.mul[a][b] not in idx:
                    raise ConstructionError(
                        f"set is not multiplicatively closed: "
                        f"{ring.element_repr(a)}*{ring.element_repr(b)} escapes")
        object.__setattr__(self, "indices", tuple(sorted(idx)))

    def elements(self):
        return [Element(self.ring, i) for i in self.indices]

    def __repr__(self):
        elems = ", ".join(self.ring.element_repr(i) for i in self.indices)
        return "{" + elems + "}"


def mult_set(ring, elems):
    idx = [e.idx if isinstance(e, Element) else ring.from_payload(e).idx for e in elems]
    return MultiplicativeSet(ring, tuple(sorted(set(idx) | {ring.one_idx})))


def mult_closure(ring, elems):
    """Smallest multiplicative set containing 1 and the given elements."""
    idx = {ring.one_idx}
    idx.update(e.idx if isinstance(e, Element) else ring.from_payload(e).idx
               for e in elems)
    while True:
        fresh = {ring.mul[a][b] for a in idx for b in idx} - idx
        if not fresh:
            break
        idx |= fresh
    return MultiplicativeSet(ring, tuple(sorted(idx)))


class LocalizationRecord:
    def __init__(self, ring, base, sset, canonical, kernel, class_of):
        self.ring = ring
        self.base = base
        self.sset = sset
        self.canonical = canonical
        self.kernel = kernel
        self.class_of = class_of  # (numerator idx, denominator idx) -> class idx

    def extend_mask(self, base_mask):
        cache = self.ring._cache.setdefault("extmask", {})
        hit = cache.get(base_mask)
        if hit is None:
            from .ideals import ideal_from_generators
            gens = [Element(self.ring, self.canonical.mapping[i])
                    for i in _bits(base_mask)]
            hit = ideal_from_generators(self.ring, gens).mask
            cache[base_mask] = hit
        return hit

    def contract_mask(self, loc_mask):
        out = 0
        for i, v in enumerate(self.canonical.mapping):
            if loc_mask >> v & 1:
                out |= 1 << i
        return out

    def extend(self, I):
        if I.ring.key != self.base.key:
            raise CrossRingError("ideal lives in a different ring")
        return _mk_ideal(self.ring, self.extend_mask(I.mask))

    def contract(self, K):
        if K.ring.key != self.ring.key:
            raise CrossRingError("ideal lives in a different localization")
        return _mk_ideal(self.base, self.contract_mask(K.mask))


def localize(ring, sset):
    """S^{-1}R by exhaustive partitioning of R x S.

    (r,s) ~ (r',s') iff u(rs' - r's) = 0 for some u in S, equivalently
    rs' - r's lies in the saturation kernel {a : ua = 0 for some u in S};
    the kernel form is what the partition uses (same relation, one scan).
    """
    if not ring.is_finite:
        raise InfiniteRingError("localization is supported over finite rings only")
    if sset.ring.key != ring.key:
        raise CrossRingError("multiplicative set belongs to a different ring")
    cache = ring._cache.setdefault("localizations", {})
    hit = cache.get(sset.indices)
    if hit is not None:
        return hit
    n = ring.size
    add, mul, neg = ring.add, ring.mul, ring.neg
    zero = ring.zero_idx
    s_list = list(sset.indices)
    if zero in s_list:
        raise ConstructionError("0 in S collapses the localization to the zero ring")
    ker = 0
    for a in range(n):
        if any(mul[u][a] == zero for u in s_list):
            ker |= 1 << a
    class_of = {}
    reps = []
    for r in range(n):
        for s in s_list:
            found = None
            for ci, (r2, s2) in enumerate(reps):
                diff = add[mul[r][s2]][neg[mul[r2][s]]]
                if ker >> diff & 1:
                    found = ci
                    break
            if found is None:
                reps.append((r, s))
                found = len(reps) - 1
            class_of[(r, s)] = found
    size = len(reps)
    addq = [[0] * size for _ in range(size)]
    mulq = [[0] * size for _ in range(size)]
    for i, (r1, s1) in enumerate(reps):
        for j, (r2, s2) in enumerate(reps):
            num = add[mul[r1][s2]][mul[r2][s1]]
            den = mul[s1][s2]
            addq[i][j] = class_of[(num, den)]
            mulq[i][j] = class_of[(mul[r1][r2], den)]
    elems = [(ring.elements[r], ring.elements[s]) for (r, s) in reps]
    rrepr = ring._repr_fn or str

    def frac_repr(p):
        return f"{rrepr(p[0])}/{rrepr(p[1])}"

    spec = LocalizationSpec(ring.spec, sset.indices)
    lring = Ring(spec, elements=elems, add=addq, mul=mulq,
                 zero=class_of[(zero, ring.one_idx)],
                 one=class_of[(ring.one_idx, ring.one_idx)],
                 repr_fn=frac_repr)
    lring.origin = ("localization", ring, sset)
    register_ring(lring)
    canonical = Homomorphism(ring, lring,
                             mapping=[class_of[(i, ring.one_idx)] for i in range(n)],
                             check=False)
    rec = LocalizationRecord(lring, ring, sset, canonical, _mk_ideal(ring, ker),
                             class_of)
    cache[sset.indices] = rec
    return rec


# ---------------------------------------------------------------------------
# derived-ring dispatch for construct_ring
# ---------------------------------------------------------------------------

def build_derived_ring(spec):
    base = construct_ring(spec.base)
    if isinstance(spec, QuotientSpec):
        mask = 0
        for i in spec.ideal_elems:
            mask |= 1 << i
        return quotient_ring(base, _mk_ideal(base, mask)).ring
    if isinstance(spec, IdealizationSpec):
        return idealization(base, make_module(base, spec.module)).ring
    if isinstance(spec, LocalizationSpec):
        return localize(base, MultiplicativeSet(base, spec.denominators)).ring
    raise InvalidSpecError(f"unknown derived spec {spec!r}")

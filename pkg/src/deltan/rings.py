"""Commutative rings with identity: finite table backends plus a symbolic integer ring.

Finite rings carry a stable element enumeration (index 0 .. size-1), dense
addition/multiplication tables over indices, and canonical element payloads
(residues, coefficient tuples, pairs, ...).  The integer ring is symbolic: its
"indices" are the integer values themselves and enumeration is refused.

Every finite constructor runs a ring-axiom self check: exhaustive for sizes up
to ``AXIOM_EXHAUSTIVE_LIMIT``, a seeded random sample of triples beyond that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CrossRingError, InfiniteRingError, InvalidSpecError

AXIOM_EXHAUSTIVE_LIMIT = 256
AXIOM_SAMPLE_TRIPLES = 10000


# ---------------------------------------------------------------------------
# ring specifications (construction recipes)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModularSpec:
    n: int

    kind = "modular"

    def key(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class PolyQuotientSpec:
    base: ModularSpec
    modulus: tuple  # ascending coefficients, monic, degree >= 1

    kind = "poly_quotient"

    def key(self):
        return f"{self.base.key()}[x]/({poly_repr(self.modulus, descending=True)})"


@dataclass(frozen=True)
class ProductSpec:
    left: object
    right: object

    kind = "product"

    def key(self):
        return f"prod({self.left.key()},{self.right.key()})"


@dataclass(frozen=True)
class IntegerSpec:
    kind = "integer"

    def key(self):
        return "ZZ"


@dataclass(frozen=True)
class QuotientSpec:
    """Derived: base ring modulo the ideal given by its sorted element indices."""

    base: object
    ideal_elems: tuple

    kind = "quotient"

    def key(self):
        elems = ",".join(str(i) for i in self.ideal_elems)
        return f"quot({self.base.key()},[{elems}])"


@dataclass(frozen=True)
class IdealizationSpec:
    """Derived: base ring extended by a module along the square-zero product."""

    base: object
    module: object  # a module spec from the constructions module

    kind = "idealization"

    def key(self):
        return f"idz({self.base.key()},{self.module.key()})"


@dataclass(frozen=True)
class LocalizationSpec:
    """Derived: fractions of the base ring over the multiplicative set."""

    base: object
    denominators: tuple  # sorted element indices of S

    kind = "localization"

    def key(self):
        elems = ",".join(str(i) for i in self.denominators)
        return f"loc({self.base.key()},[{elems}])"


# ---------------------------------------------------------------------------
# polynomial coefficient helpers (ascending tuples over Z_n)
# ---------------------------------------------------------------------------

def poly_repr(coeffs, var="x", descending=False):
    """Render an ascending coefficient tuple, e.g. (1, 3, 1) -> ``1+3x+x^2``."""
    terms = []
    indexed = list(enumerate(coeffs))
    if descending:
        indexed.reverse()
    for i, c in indexed:
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(var if c == 1 else f"{c}{var}")
        else:
            terms.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(terms) if terms else "0"


def _poly_normalize(n, coeffs):
    """Validate and return a monic ascending modulus tuple over Z_n."""
    coeffs = [c % n for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise InvalidSpecError("modulus must have degree >= 1")
    lead = coeffs[-1]
    inv = None
    for x in range(n):
        if (lead * x) % n == 1:
            inv = x
            break
    if inv is None:
        raise InvalidSpecError(f"modulus leading coefficient {lead} is not a unit mod {n}")
    return tuple((c * inv) % n for c in coeffs)


def _poly_mul_reduce(a, b, n, modulus):
    """Multiply two ascending coefficient tuples and reduce by the monic modulus."""
    d = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % n
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            base = k - d
            for i in range(d):
                prod[base + i] = (prod[base + i] - c * modulus[i]) % n
    out = prod[:d] + [0] * (d - len(prod))
    return tuple(out[:d])


# ---------------------------------------------------------------------------
# rings and elements
# ---------------------------------------------------------------------------

class Ring:
    """A commutative ring with identity, finite (tables) or the symbolic integers."""

    def __init__(self, spec, *, elements=None, add=None, mul=None, zero=0, one=1,
                 repr_fn=None, origin=None, check=True):
        self.spec = spec
        self.key = spec.key()
        self.elements = elements
        self.add = add
        self.mul = mul
        self.zero_idx = zero
        self.one_idx = one
        self.origin = origin
        self._repr_fn = repr_fn
        self._cache = {}
        if elements is not None:
            self._index = {p: i for i, p in enumerate(elements)}
            self.neg = [None] * len(elements)
            for i, row in enumerate(add):
                for j, s in enumerate(row):
                    if s == zero:
                        self.neg[i] = j
                        break
            if check:
                check_ring_axioms(self)

    # -- basic shape ----------------------------------------------------

    @property
    def is_finite(self):
        return self.elements is not None

    @property
    def size(self):
        """Number of elements, or None on the infinite integer backend."""
        return len(self.elements) if self.is_finite else None

    def __repr__(self):
        return f"Ring({self.key})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # -- elements --------------------------------------------------------

    def el(self, idx):
        """Element from its index (finite) or integer value (ZZ)."""
        if self.is_finite and not (0 <= idx < len(self.elements)):
            raise InvalidSpecError(f"element index {idx} out of range for {self.key}")
        return Element(self, idx)

    def from_payload(self, payload):
        if not self.is_finite:
            return Element(self, int(payload))
        try:
            return Element(self, self._index[payload])
        except (KeyError, TypeError):
            raise InvalidSpecError(f"{payload!r} is not a canonical element of {self.key}")

    @property
    def zero(self):
        return Element(self, 0 if not self.is_finite else self.zero_idx)

    @property
    def one(self):
        return Element(self, 1 if not self.is_finite else self.one_idx)

    def list_elements(self):
        """All elements in the stable enumeration order (finite backends only)."""
        if not self.is_finite:
            raise InfiniteRingError("infinite backend: the integer ring refuses enumeration")
        return [Element(self, i) for i in range(len(self.elements))]

    def element_repr(self, idx):
        if not self.is_finite:
            return str(idx)
        if self._repr_fn is not None:
            return self._repr_fn(self.elements[idx])
        return str(self.elements[idx])

    # -- index arithmetic (finite) / value arithmetic (ZZ) ---------------

    def add_idx(self, i, j):
        return self.add[i][j] if self.is_finite else i + j

    def mul_idx(self, i, j):
        return self.mul[i][j] if self.is_finite else i * j

    def neg_idx(self, i):
        return self.neg[i] if self.is_finite else -i


class Element:
    """An immutable element of a specific ring, compared by canonical form."""

    __slots__ = ("ring", "idx")

    def __init__(self, ring, idx):
        self.ring = ring
        self.idx = idx

    @property
    def payload(self):
        return self.ring.elements[self.idx] if self.ring.is_finite else self.idx

    def _same_ring(self, other):
        if not isinstance(other, Element) or other.ring.key != self.ring.key:
            raise CrossRingError(
                f"cannot combine elements of {self.ring.key} and "
                f"{getattr(getattr(other, 'ring', None), 'key', type(other).__name__)}")
        return other

    def __add__(self, other):
        other = self._same_ring(other)
        return Element(self.ring, self.ring.add_idx(self.idx, other.idx))

    def __neg__(self):
        return Element(self.ring, self.ring.neg_idx(self.idx))

    def __sub__(self, other):
        return self + (-self._same_ring(other))

    def __mul__(self, other):
        other = self._same_ring(other)
        return Element(self.ring, self.ring.mul_idx(self.idx, other.idx))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in a ring")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, Element) and other.ring.key == self.ring.key
                and other.idx == self.idx)

    def __hash__(self):
        return hash((self.ring.key, self.idx))

    def __repr__(self):
        return self.ring.element_repr(self.idx)


def arithmetic(ring, op, a, b=None):
    """Apply ``add``/``mul``/``neg`` to elements of ``ring`` (contract form)."""
    if a.ring.key != ring.key or (b is not None and b.ring.key != ring.key):
        raise CrossRingError("operands must belong to the given ring")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown ring operation {op!r}")


def list_elements(ring):
    return ring.list_elements()


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

_RING_CACHE = {}


def register_ring(ring):
    """Make a derived ring discoverable by construct_ring on its own spec."""
    _RING_CACHE.setdefault(ring.key, ring)


def construct_ring(spec):
    """Build (or fetch from cache) the ring described by ``spec``."""
    key = spec.key()
    hit = _RING_CACHE.get(key)
    if hit is not None:
        return hit
    if isinstance(spec, ModularSpec):
        ring = _build_modular(spec)
    elif isinstance(spec, PolyQuotientSpec):
        ring = _build_poly_quotient(spec)
    elif isinstance(spec, ProductSpec):
        ring = _build_product(spec)
    elif isinstance(spec, IntegerSpec):
        ring = Ring(spec)
    elif isinstance(spec, (QuotientSpec, IdealizationSpec, LocalizationSpec)):
        from . import constructions
        ring = constructions.build_derived_ring(spec)
    else:
        raise InvalidSpecError(f"unknown ring spec {spec!r}")
    _RING_CACHE[key] = ring
    return ring


def modular(n):
    if not isinstance(n, int) or n < 2:
        raise InvalidSpecError("modular ring needs an integer modulus n >= 2")
    return construct_ring(ModularSpec(n))


def poly_quotient(base, modulus):
    """Quotient of Z_n[x] by a monic modulus, given as an ascending coefficient list."""
    if isinstance(base, Ring):
        base = base.spec
    if isinstance(base, int):
        base = ModularSpec(base)
    if not isinstance(base, ModularSpec):
        raise InvalidSpecError("poly_quotient requires a modular base ring")
    if base.n < 2:
        raise InvalidSpecError("modular ring needs an integer modulus n >= 2")
    return construct_ring(PolyQuotientSpec(base, _poly_normalize(base.n, list(modulus))))


def product(left, right):
    if isinstance(left, Ring):
        left = left.spec
    if isinstance(right, Ring):
        right = right.spec
    return construct_ring(ProductSpec(left, right))


def integers():
    return construct_ring(IntegerSpec())


def _build_modular(spec):
    n = spec.n
    if n < 2:
        raise InvalidSpecError("modular ring needs an integer modulus n >= 2")
    elems = list(range(n))
    add = [[(i + j) % n for j in elems] for i in elems]
    mul = [[(i * j) % n for j in elems] for i in elems]
    return Ring(spec, elements=elems, add=add, mul=mul, zero=0, one=1 % n, repr_fn=str)


def _build_poly_quotient(spec):
    n = spec.base.n
    if n < 2:
        raise InvalidSpecError("modular ring needs an integer modulus n >= 2")
    modulus = spec.modulus
    d = len(modulus) - 1
    size = n ** d
    elems = []
    for i in range(size):
        v, digits = i, []
        for _ in range(d):
            digits.append(v % n)
            v //= n
        elems.append(tuple(digits))
    index = {p: i for i, p in enumerate(elems)}
    add = [[index[tuple((a[k] + b[k]) % n for k in range(d))] for b in elems] for a in elems]
    mul = [[index[_poly_mul_reduce(a, b, n, modulus)] for b in elems] for a in elems]
    one = index[tuple([1 % n] + [0] * (d - 1))]
    return Ring(spec, elements=elems, add=add, mul=mul, zero=0, one=one,
                repr_fn=poly_repr)


def _build_product(spec):
    left = construct_ring(spec.left)
    right = construct_ring(spec.right)
    if not (left.is_finite and right.is_finite):
        raise InvalidSpecError("product components must be finite rings")
    sr = right.size
    elems = [(a, b) for a in left.elements for b in right.elements]
    la, ra = left.add, right.add
    lm, rm = left.mul, right.mul
    size_l, size_r = left.size, right.size
    add = [[la[i // sr][j // sr] * sr + ra[i % sr][j % sr]
            for j in range(size_l * size_r)] for i in range(size_l * size_r)]
    mul = [[lm[i // sr][j // sr] * sr + rm[i % sr][j % sr]
            for j in range(size_l * size_r)] for i in range(size_l * size_r)]
    zero = left.zero_idx * sr + right.zero_idx
    one = left.one_idx * sr + right.one_idx

    def pair_repr(p):
        return f"({left._repr_fn(p[0]) if left._repr_fn else p[0]}," \
               f"{right._repr_fn(p[1]) if right._repr_fn else p[1]})"

    ring = Ring(spec, elements=elems, add=add, mul=mul, zero=zero, one=one,
                repr_fn=pair_repr)
    ring._cache["components"] = (left, right)
    return ring


# ---------------------------------------------------------------------------
# axiom self-check
# ---------------------------------------------------------------------------

def check_ring_axioms(ring, exhaustive_limit=AXIOM_EXHAUSTIVE_LIMIT,
                      samples=AXIOM_SAMPLE_TRIPLES):
    """Verify the commutative-ring axioms on a finite ring; raise on violation.

    Pair axioms (commutativity, identities, negation) are always exhaustive;
    triple axioms (associativity, distributivity) are exhaustive up to
    ``exhaustive_limit`` elements and checked on a seeded random sample beyond.
    """
    n = ring.size
    add, mul = ring.add, ring.mul
    zero, one = ring.zero_idx, ring.one_idx
    if n < 2 or zero == one:
        raise InvalidSpecError(f"{ring.key}: ring must have 0 != 1")
    for i in range(n):
        if add[zero][i] != i:
            raise InvalidSpecError(f"{ring.key}: 0 is not an additive identity")
        if mul[one][i] != i:
            raise InvalidSpecError(f"{ring.key}: 1 is not a multiplicative identity")
        if ring.neg[i] is None:
            raise InvalidSpecError(f"{ring.key}: element {i} has no additive inverse")
        for j in range(i, n):
            if add[i][j] != add[j][i]:
                raise InvalidSpecError(f"{ring.key}: addition is not commutative")
            if mul[i][j] != mul[j][i]:
                raise InvalidSpecError(f"{ring.key}: multiplication is not commutative")
    if n <= exhaustive_limit:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(ring.key)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(samples))
    for a, b, c in triples:
        if add[add[a][b]][c] != add[a][add[b][c]]:
            raise InvalidSpecError(f"{ring.key}: addition is not associative")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise InvalidSpecError(f"{ring.key}: multiplication is not associative")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            raise InvalidSpecError(f"{ring.key}: distributivity fails")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ElementClass:
    is_zero: bool
    is_unit: bool
    is_nilpotent: bool
    nilpotency_index: object  # int or None
    is_zero_divisor: bool
    is_regular: bool
    is_idempotent: bool


@dataclass(frozen=True)
class RingClass:
    is_field: bool
    is_integral_domain: bool
    is_reduced: bool
    is_von_neumann_regular: bool
    is_boolean: bool
    is_quasi_local: bool
    maximal_ideal: object  # the unique maximal ideal when quasi-local, else None


def classify_element(ring, a):
    """Flags for one element: unit, nilpotent (with index), zero divisor, ..."""
    if a.ring.key != ring.key:
        raise CrossRingError("element does not belong to the given ring")
    if not ring.is_finite:
        v = a.idx
        return ElementClass(
            is_zero=v == 0,
            is_unit=v in (1, -1),
            is_nilpotent=v == 0,
            nilpotency_index=1 if v == 0 else None,
            is_zero_divisor=False,
            is_regular=v != 0,
            is_idempotent=v in (0, 1),
        )
    i = a.idx
    mul, zero, one, n = ring.mul, ring.zero_idx, ring.one_idx, ring.size
    row = mul[i]
    is_zero = i == zero
    is_unit = any(row[j] == one for j in range(n))
    power, nil_index = i, None
    for k in range(1, n + 1):
        if power == zero:
            nil_index = k if i != zero else 1
            break
        power = mul[power][i]
    is_nilpotent = nil_index is not None or is_zero
    if is_zero:
        nil_index = 1
    is_zero_divisor = (not is_zero) and any(
        row[j] == zero for j in range(n) if j != zero)
    is_regular = not any(row[j] == zero for j in range(n) if j != zero) and not is_zero
    return ElementClass(
        is_zero=is_zero,
        is_unit=is_unit,
        is_nilpotent=is_nilpotent,
        nilpotency_index=nil_index if is_nilpotent else None,
        is_zero_divisor=is_zero_divisor,
        is_regular=is_regular,
        is_idempotent=mul[i][i] == i,
    )


def classify_ring(ring):
    """Ring-level flags, exhaustively decided on finite backends."""
    if not ring.is_finite:
        return RingClass(is_field=False, is_integral_domain=True, is_reduced=True,
                         is_von_neumann_regular=False, is_boolean=False,
                         is_quasi_local=False, maximal_ideal=None)
    cached = ring._cache.get("ring_class")
    if cached is not None:
        return cached
    n, mul, zero, one = ring.size, ring.mul, ring.zero_idx, ring.one_idx
    nonzero = [i for i in range(n) if i != zero]
    is_field = all(any(mul[a][x] == one for x in range(n)) for a in nonzero)
    is_domain = all(mul[a][b] != zero for a in nonzero for b in nonzero)
    is_vnr = all(any(mul[mul[a][a]][x] == a for x in range(n)) for a in range(n))
    is_boolean = all(mul[a][a] == a for a in range(n))

    from . import ideals
    nil = ideals.nilradical(ring)
    is_reduced = nil.size == 1
    maximals = [I for I in ideals.enumerate_ideals(ring) if ideals.classify_ideal(I).is_maximal]
    quasi_local = len(maximals) == 1
    result = RingClass(
        is_field=is_field,
        is_integral_domain=is_domain,
        is_reduced=is_reduced,
        is_von_neumann_regular=is_vnr,
        is_boolean=is_boolean,
        is_quasi_local=quasi_local,
        maximal_ideal=maximals[0] if quasi_local else None,
    )
    ring._cache["ring_class"] = result
    return result

"""The default corpus, the claim runner, and report rendering.

The corpus is a fixed, deterministic list of small rings, each paired with its
expansion catalog: delta0, delta1, full, delta_plus(J) for every proper J,
delta_star(P) for every nonzero P, and one composition delta1 o
delta_plus(sqrt(0)).  ``run_claims`` evaluates registry claims over the corpus
and aggregates per-claim reports with capped failure witnesses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .claims import CHECKERS, CLAIMS, CLAIMS_BY_ID, Witness
from .constructions import (Homomorphism, MultiplicativeSet, idealization,
                            is_delta_gamma_homomorphism, make_module,
                            mult_closure, quotient_ring)
from .errors import UnknownClaimError
from .expansions import (compose_expansions, delta0, delta1, delta_plus,
                         delta_star, derive_idealization_expansion,
                         derive_localized_expansion, derive_product_expansion,
                         derive_quotient_expansion, full_expansion)
from .ideals import enumerate_ideals, ideal_from_generators, nilradical
from .rings import integers, modular, poly_quotient, product


@dataclass(frozen=True)
class CorpusEntry:
    ring: object
    expansions: tuple


@dataclass(frozen=True)
class Corpus:
    entries: tuple


_CATALOGS = {}


def catalog(ring):
    """The per-ring expansion catalog in deterministic order."""
    hit = _CATALOGS.get(ring.key)
    if hit is not None:
        return hit
    lattice = enumerate_ideals(ring)
    out = [delta0(ring), delta1(ring), full_expansion(ring)]
    out.extend(delta_plus(ring, J) for J in lattice if J.is_proper)
    out.extend(delta_star(ring, P) for P in lattice if not P.is_zero)
    out.append(compose_expansions(delta1(ring), delta_plus(ring, nilradical(ring))))
    hit = tuple(out)
    _CATALOGS[ring.key] = hit
    return hit


def _corpus_rings():
    rings = [modular(n) for n in list(range(2, 17)) + [24, 27, 32, 36, 64]]
    rings += [
        poly_quotient(4, [0, 0, 1]),
        poly_quotient(4, [0, 0, 0, 1]),
        poly_quotient(2, [0, 0, 1]),
        poly_quotient(2, [0, 0, 0, 1]),
        poly_quotient(2, [1, 1, 1]),
        poly_quotient(3, [0, 0, 1]),
        product(modular(2), modular(2)),
        product(modular(4), modular(9)),
        product(modular(2), modular(4)),
    ]
    z2, z4, z8 = modular(2), modular(4), modular(8)
    rings.append(idealization(z2, make_module(z2, "regular")).ring)
    rings.append(idealization(z4, make_module(z4, "regular")).ring)
    four = ideal_from_generators(z8, [z8.el(4)])
    rings.append(idealization(z8, make_module(z8, ("quotient", four))).ring)
    return rings


_BUILTIN = None


def builtin_corpus():
    """The deterministic default corpus (29 rings, catalogs attached)."""
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = Corpus(entries=tuple(
            CorpusEntry(ring=r, expansions=catalog(r)) for r in _corpus_rings()))
    return _BUILTIN


def load_corpus(path):
    """Corpus from a text file: one ring expression per line, '#' comments."""
    from .dsl import parse_spec, bind_ring
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            ring = bind_ring(parse_spec(line))
            if not ring.is_finite:
                raise UnknownClaimError("corpus files may contain finite rings only")
            entries.append(CorpusEntry(ring=ring, expansions=catalog(ring)))
    return Corpus(entries=tuple(entries))


# ---------------------------------------------------------------------------
# evaluation context shared by the checkers
# ---------------------------------------------------------------------------

class Context:
    def __init__(self, corpus):
        self.corpus = corpus
        self.entries = corpus.entries
        self.zz = integers()
        self._compose = {}
        self._qexp = {}
        self._pexp = {}
        self._iexp = {}
        self._lexp = {}
        self._msets = {}
        self._homs = None

    def catalog(self, ring):
        for entry in self.entries:
            if entry.ring.key == ring.key:
                return entry.expansions
        return catalog(ring)

    def composition(self, delta, gamma):
        key = (delta.ring.key, delta.name(), gamma.name())
        hit = self._compose.get(key)
        if hit is None:
            hit = self._compose[key] = compose_expansions(delta, gamma)
        return hit

    def quotient_expansion(self, delta, J):
        key = (delta.ring.key, delta.name(), J.mask)
        hit = self._qexp.get(key)
        if hit is None:
            hit = self._qexp[key] = derive_quotient_expansion(delta, J)
        return hit

    def product_expansion(self, d1, d2):
        key = (d1.ring.key, d1.name(), d2.ring.key, d2.name())
        hit = self._pexp.get(key)
        if hit is None:
            hit = self._pexp[key] = derive_product_expansion(d1, d2)
        return hit

    def idealization_expansion(self, delta, module):
        key = (delta.ring.key, delta.name(), module.key)
        hit = self._iexp.get(key)
        if hit is None:
            hit = self._iexp[key] = derive_idealization_expansion(delta, module)
        return hit

    def localized_expansion(self, delta, sset):
        key = (delta.ring.key, delta.name(), sset.indices)
        hit = self._lexp.get(key)
        if hit is None:
            hit = self._lexp[key] = derive_localized_expansion(delta, sset)
        return hit

    def mult_sets(self, ring):
        """Deterministic family: {1}, the units, and the closure of each
        non-unit non-nilpotent element (deduplicated)."""
        hit = self._msets.get(ring.key)
        if hit is not None:
            return hit
        one = ring.one_idx
        n = ring.size
        units = sorted(a for a in range(n)
                       if any(ring.mul[a][x] == one for x in range(n)))
        nil_mask = nilradical(ring).mask
        family = [MultiplicativeSet(ring, (one,))]
        seen = {family[0].indices}
        units_set = MultiplicativeSet(ring, tuple(units))
        if units_set.indices not in seen:
            seen.add(units_set.indices)
            family.append(units_set)
        unit_lookup = set(units)
        for a in range(n):
            if a in unit_lookup or nil_mask >> a & 1:
                continue
            closed = mult_closure(ring, [ring.el(a)])
            if closed.indices not in seen:
                seen.add(closed.indices)
                family.append(closed)
        hit = tuple(family)
        self._msets[ring.key] = hit
        return hit

    def idealization_instances(self):
        out = []
        for entry in self.entries:
            ring = entry.ring
            if ring.spec.kind != "idealization":
                continue
            _, base, module = ring.origin
            out.append((idealization(base, module), self.catalog(base)))
        return out

    def hom_instances(self):
        """Family homomorphisms with their expansion-pair candidates.

        Identities pair each catalog delta with itself; projections pair delta
        with its quotient-derived expansion; the diagonal embedding of Z2 into
        Z2 x Z2 is scanned against the full catalog product.
        """
        if self._homs is not None:
            return self._homs
        out = []
        ring_keys = {e.ring.key for e in self.entries}
        for entry in self.entries:
            ring = entry.ring
            ident = Homomorphism(ring, ring, mapping=list(range(ring.size)),
                                 check=False)
            out.append((ident, tuple((d, d) for d in entry.expansions)))
            for J in enumerate_ideals(ring):
                if not J.is_proper:
                    continue
                rec = quotient_ring(ring, J)
                pairs = tuple((d, self.quotient_expansion(d, J))
                              for d in entry.expansions)
                out.append((rec.projection, pairs))
        if "Z2" in ring_keys and "prod(Z2,Z2)" in ring_keys:
            z2 = modular(2)
            z2xz2 = product(z2, z2)
            diag = Homomorphism(
                z2, z2xz2,
                mapping=[z2xz2.from_payload((a, a)).idx for a in z2.elements],
                check=False)
            pairs = tuple((d, g) for d in self.catalog(z2)
                          for g in self.catalog(z2xz2))
            out.append((diag, pairs))
        self._homs = out
        return out

    def dg_hom(self, f, delta, gamma):
        cache = getattr(f, "_dg_cache", None)
        if cache is None:
            cache = f._dg_cache = {}
        key = (delta.name(), gamma.name())
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = is_delta_gamma_homomorphism(f, delta, gamma)
        return hit


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    title: str
    instances_checked: int
    holds: int
    hypothesis_not_met: int
    failed: int
    witnesses: tuple
    notes: tuple

    def to_dict(self):
        return {
            "claim_id": self.claim_id,
            "title": self.title,
            "instances_checked": self.instances_checked,
            "holds": self.holds,
            "hypothesis_not_met": self.hypothesis_not_met,
            "failed": self.failed,
            "failures": [w.to_dict() for w in self.witnesses],
            "notes": list(self.notes),
        }


def claim_ids(include_self_tests=False):
    return [c.id for c in CLAIMS if include_self_tests or not c.self_test]


def run_claims(corpus=None, claim_ids=None, witness_cap=5):
    """Evaluate claims over the corpus; self-tests run only when named explicitly."""
    corpus = corpus if corpus is not None else builtin_corpus()
    if claim_ids is None:
        selected = [c for c in CLAIMS if not c.self_test]
    else:
        selected = []
        for cid in claim_ids:
            claim = CLAIMS_BY_ID.get(cid)
            if claim is None:
                raise UnknownClaimError(f"unknown claim id {cid!r}")
            selected.append(claim)
    ctx = Context(corpus)
    reports = []
    for claim in selected:
        checked = holds = skipped = failed = 0
        witnesses = []
        for status, witness in CHECKERS[claim.id](ctx):
            checked += 1
            if status == "holds":
                holds += 1
            elif status == "skip":
                skipped += 1
            else:
                failed += 1
                if len(witnesses) < witness_cap:
                    witnesses.append(witness or Witness())
        reports.append(ClaimReport(
            claim_id=claim.id, title=claim.title, instances_checked=checked,
            holds=holds, hypothesis_not_met=skipped, failed=failed,
            witnesses=tuple(witnesses), notes=claim.notes))
    return reports


def find_counterexample(claim_id, corpus=None):
    """First failure witness of one claim in deterministic order, or None."""
    if claim_id not in CLAIMS_BY_ID:
        raise UnknownClaimError(f"unknown claim id {claim_id!r}")
    corpus = corpus if corpus is not None else builtin_corpus()
    ctx = Context(corpus)
    for status, witness in CHECKERS[claim_id](ctx):
        if status == "fail":
            return witness or Witness()
    return None


def render_text(reports):
    lines = ["claim verification report", "=" * 25]
    total_failed = 0
    for rep in reports:
        status = "ok" if rep.failed == 0 else "FAIL"
        total_failed += rep.failed
        lines.append(f"[{status:4}] {rep.claim_id}: checked={rep.instances_checked} "
                     f"holds={rep.holds} hypothesis_not_met={rep.hypothesis_not_met} "
                     f"failures={rep.failed}")
        for note in rep.notes:
            lines.append(f"       note: {note}")
        for w in rep.witnesses:
            lines.append(f"       witness: {w.text()}")
    lines.append("-" * 25)
    lines.append(f"claims: {len(reports)}, total failures: {total_failed}")
    return "\n".join(lines) + "\n"


def render_json(reports):
    payload = [rep.to_dict() for rep in reports]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"

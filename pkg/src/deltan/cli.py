"""Command-line front end: inspect ideal lattices, classify ideals, run the verifier.

Exit codes: 0 success, 1 at least one claim failure, 2 usage/parse/semantic error.
"""

from __future__ import annotations

import argparse
import sys

from .claims import CLAIMS_BY_ID
from .errors import DeltanError, DslError, ImproperIdealError
from .dsl import (bind_expansion, bind_ideal, bind_ring, parse_expansion_text,
                  parse_ideal_text, parse_spec, ring_to_dsl)
from .ideals import classify_ideal, enumerate_ideals
from .expansions import apply_expansion
from .predicates import (DELTA_N_METHODS, delta_n_witness, delta_primary_witness,
                         is_delta_n_ideal, is_delta_primary, is_n_ideal,
                         is_quasi_n_ideal, n_ideal_witness, quasi_n_witness)
from .verifier import builtin_corpus, load_corpus, render_json, render_text, run_claims


def _bool_row(label, value, witness=None):
    text = f"{label}: {'true' if value else 'false'}"
    if witness is not None and not value:
        a, b = witness
        text += f"  (witness: a={a!r}, b={b!r})"
    print(text)


def _cmd_ideals(args):
    ring = bind_ring(parse_spec(args.ring))
    lattice = enumerate_ideals(ring)
    print(f"ideal lattice of {ring_to_dsl(ring)} ({len(lattice)} ideals):")
    for I in lattice:
        gens = ", ".join(ring.element_repr(g.idx) for g in I.gens) or "0"
        print(f"  size {I.size:>4}   generators ({gens})")
    return 0


def _cmd_classify(args):
    ring = bind_ring(parse_spec(args.ring))
    ideal = bind_ideal(ring, parse_ideal_text(args.ideal))
    print(f"ring: {ring_to_dsl(ring)}" +
          (f" ({ring.size} elements)" if ring.is_finite else " (infinite)"))
    print(f"ideal: {ideal!r}" +
          (f" ({ideal.size} elements)" if ring.is_finite else ""))
    flags = classify_ideal(ideal)
    _bool_row("proper", flags.is_proper)
    _bool_row("prime", flags.is_prime)
    _bool_row("maximal", flags.is_maximal)
    _bool_row("primary", flags.is_primary)
    _bool_row("superfluous", flags.is_superfluous)
    if not flags.is_proper:
        print("error: this ideal class is defined for proper ideals only; "
              "got the whole ring")
        return 2
    _bool_row("n-ideal", is_n_ideal(ideal), n_ideal_witness(ideal))
    _bool_row("quasi n-ideal", is_quasi_n_ideal(ideal), quasi_n_witness(ideal))
    if args.delta:
        delta = bind_expansion(ring, parse_expansion_text(args.delta))
        print(f"expansion: {delta.name()}")
        print(f"delta(I): {apply_expansion(delta, ideal)!r}")
        _bool_row("delta-primary", is_delta_primary(ideal, delta),
                  delta_primary_witness(ideal, delta))
        wit = delta_n_witness(ideal, delta)
        for method in DELTA_N_METHODS:
            value = is_delta_n_ideal(ideal, delta, method=method)
            _bool_row(f"delta-n-ideal ({method})", value,
                      wit if method == "definition" else None)
    return 0


def _cmd_verify(args):
    corpus = builtin_corpus() if args.corpus == "default" else load_corpus(args.corpus)
    claim_ids = args.claims.split(",") if args.claims else None
    reports = run_claims(corpus=corpus, claim_ids=claim_ids,
                         witness_cap=args.witness_cap)
    sys.stdout.write(render_text(reports))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(render_json(reports))
    return 1 if any(rep.failed for rep in reports) else 0


def _cmd_explain(args):
    claim = CLAIMS_BY_ID.get(args.claim_id)
    if claim is None:
        print(f"error: unknown claim id {args.claim_id!r}", file=sys.stderr)
        return 2
    print(f"claim: {claim.id}")
    print(f"title: {claim.title}")
    print(f"statement: {claim.statement}")
    print(f"quantifies over: {claim.quantifies}")
    if claim.self_test:
        print("kind: deliberately inverted self-test of the witness machinery")
    for note in claim.notes:
        print(f"note: {note}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="deltan",
        description="Finite commutative rings, ideal expansions, and the "
                    "delta-n-ideal verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideals", help="list the ideal lattice of a ring")
    p.add_argument("ring", help="ring expression, e.g. 'Z12' or 'Z4[x]/(x^3)'")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("classify", help="classify an ideal of a ring")
    p.add_argument("ring")
    p.add_argument("ideal", help="generator list, e.g. '(0)' or '(2,x)'")
    p.add_argument("--delta", help="expansion, e.g. d1 or 'd+((3))'")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the claim verifier")
    p.add_argument("--claims", help="comma-separated claim ids (default: all "
                                    "registry claims except self-tests)")
    p.add_argument("--corpus", default="default",
                   help="'default' or a path to a file of ring expressions")
    p.add_argument("--json", help="write the machine-readable report here")
    p.add_argument("--witness-cap", type=int, default=5,
                   help="max failure witnesses kept per claim (default 5)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explain", help="describe a registry claim")
    p.add_argument("claim_id")
    p.set_defaults(func=_cmd_explain)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except DslError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ImproperIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DeltanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

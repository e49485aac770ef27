"""Batch command line front end with JSON input and output.

Payloads are read from a file argument (or stdin when the argument is "-"
or omitted) and written to stdout; identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 malformed input, 2 a
semantic precondition was violated (non-sharp monoid, level mismatch and
friends), 3 the infinite-quotient check came back inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import graded, infquot, jsonio, kummer, monoid, parabolic
from .errors import MalformedInput, MonostackError
from .fields import QQ, field_from_spec

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_PRECONDITION = 2
EXIT_INCONCLUSIVE = 3


def _read_payload(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read JSON input: {exc}") from exc


def _emit(payload, summary, pretty):
    if pretty:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        if summary:
            sys.stderr.write(summary + "\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _field_from_args(args):
    spec = args.field or os.environ.get("MONOSTACK_FIELD") or "Q"
    return field_from_spec(spec)


def _parse_vec(text):
    return jsonio.vec_from_key(text)


def _parse_levels(text):
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise MalformedInput(f"bad level list {text!r}") from exc


# -- command handlers ---------------------------------------------------------


def cmd_monoid(args):
    pres = jsonio.monoid_from_json(_read_payload(args.input))
    if args.action == "info":
        payload = {
            "monoid": jsonio.monoid_to_json(pres),
            "group_rank": pres.group_rank,
            "facets": [list(f) for f in pres.cone.facets],
            "flags": {
                "sharp": pres.is_sharp,
                "saturated": pres.is_saturated,
                "simplicial": pres.is_simplicial,
            },
        }
        summary = (
            f"rank {pres.group_rank}; sharp={pres.is_sharp} "
            f"saturated={pres.is_saturated} simplicial={pres.is_simplicial}"
        )
    elif args.action == "hilbert":
        basis = pres.hilbert_basis
        payload = {
            "monoid": jsonio.monoid_to_json(pres),
            "hilbert_basis": [jsonio.vec_to_json(v) for v in basis],
        }
        summary = f"Hilbert basis with {len(basis)} elements"
    else:  # saturate
        sat = monoid.saturate(pres)
        payload = jsonio.monoid_to_json(sat)
        summary = f"saturation has {len(sat.generators)} generators"
    return payload, summary, EXIT_OK


def cmd_delta(args, delta0_only=False):
    pres = jsonio.monoid_from_json(_read_payload(args.input))
    ds = infquot.delta_points(pres, args.level)
    if delta0_only:
        pts = ds.delta0_points
        payload = {
            "monoid": jsonio.monoid_to_json(pres),
            "level": args.level,
            "points": [jsonio.vec_to_json(p) for p in pts],
        }
        summary = f"{len(pts)} Delta0 points at level {args.level}"
    else:
        payload = {
            "monoid": jsonio.monoid_to_json(pres),
            "level": args.level,
            "points": [jsonio.vec_to_json(p) for p in ds.points],
            "in_delta0": list(ds.delta0_mask),
        }
        summary = f"{len(ds.points)} Delta points at level {args.level}"
    return payload, summary, EXIT_OK


def cmd_infquot(args):
    element = jsonio.profinite_from_json(_read_payload(args.input))
    verdict = infquot.is_infinite_quotient(element, depth=args.depth)
    payload = {"verdict": verdict.kind}
    code = EXIT_OK
    if verdict.is_confirmed:
        payload["element"] = jsonio.vec_to_json(verdict.element.vector)
    elif verdict.is_inconclusive:
        payload["level"] = verdict.level
        code = EXIT_INCONCLUSIVE
    return payload, str(verdict), code


def cmd_kummer(args):
    hom = jsonio.hom_from_json(_read_payload(args.input))
    flag = kummer.is_kummer(hom)
    payload = {"kummer": flag}
    if flag:
        group = kummer.cokernel(hom)
        payload["cokernel"] = list(group.invariant_factors)
    return payload, f"kummer={flag}", EXIT_OK


def cmd_picard(args):
    pres = jsonio.monoid_from_json(_read_payload(args.input))
    group = kummer.picard_group(pres, args.level)
    labels = kummer.enumerate_labels(pres, args.level)
    payload = {
        "monoid": jsonio.monoid_to_json(pres),
        "level": args.level,
        "invariant_factors": list(group.invariant_factors),
        "order": group.order,
        "labels": [list(lab.residues) for lab in labels],
    }
    return payload, f"picard group {group}", EXIT_OK


def cmd_ideal(args):
    pres = jsonio.monoid_from_json(_read_payload(args.input))
    bound = Fraction(args.bound) if args.bound else None
    if args.colon:
        a, b = (jsonio.vec_from_key(part) for part in args.colon.split(";"))
        ideal = graded.colon_degree_ideal(pres, args.level, a, b)
        if bound is not None:
            ideal.bound = bound
        colon = [jsonio.vec_to_json(a), jsonio.vec_to_json(b)]
    else:
        gens = [jsonio.vec_from_key(part) for part in args.generators.split(";")]
        ideal = graded.MonoidIdeal(
            pres, args.level, generators=gens, bound=bound
        )
        colon = None
    mins = graded.ideal_min_generators(ideal)
    payload = {
        "monoid": jsonio.monoid_to_json(pres),
        "level": args.level,
        "generators": [jsonio.vec_to_json(v) for v in mins],
        "count": len(mins),
    }
    if colon:
        payload["colon"] = colon
    return payload, f"{len(mins)} minimal generators", EXIT_OK


def cmd_probe(args):
    pres = jsonio.monoid_from_json(_read_payload(args.input))
    a, b = (jsonio.vec_from_key(part) for part in args.pair.split(";"))
    rows = graded.coherence_probe(pres, a, b, _parse_levels(args.levels))
    payload = {
        "monoid": jsonio.monoid_to_json(pres),
        "pair": [jsonio.vec_to_json(a), jsonio.vec_to_json(b)],
        "rows": [
            {
                "n": r["n"],
                "min_gens": r["min_gens"],
                "generators": [jsonio.vec_to_json(v) for v in r["generators"]],
            }
            for r in rows
        ],
    }
    counts = ", ".join(f"{r['n']}:{r['min_gens']}" for r in rows)
    return payload, f"min generator counts {counts}", EXIT_OK


def cmd_parabolic(args):
    if args.action == "from-graded":
        module = jsonio.graded_from_json(_read_payload(args.input))
        sheaf = parabolic.from_graded(module)
        return jsonio.parabolic_to_json(sheaf), "converted", EXIT_OK
    sheaf = jsonio.parabolic_from_json(_read_payload(args.input))
    if args.action == "to-graded":
        module = parabolic.to_graded(sheaf)
        return jsonio.graded_to_json(module), "converted", EXIT_OK
    if args.action == "restrict":
        out = parabolic.restrict(sheaf, args.to)
        return jsonio.parabolic_to_json(out), f"restricted to level {args.to}", EXIT_OK
    if args.action == "induce":
        out = parabolic.induce(sheaf, args.to)
        return jsonio.parabolic_to_json(out), f"induced to level {args.to}", EXIT_OK
    if args.action == "check-induced":
        if args.divisor:
            flag = parabolic.is_induced_from(sheaf, args.divisor)
            payload = {"divisor": args.divisor, "induced": flag}
            summary = f"induced from level {args.divisor}: {flag}"
        else:
            best = parabolic.minimal_inducing_level(sheaf)
            payload = {"minimal_inducing_level": best}
            summary = f"minimal inducing level: {best}"
        return payload, summary, EXIT_OK
    # hom
    other = jsonio.parabolic_from_json(_read_payload(args.with_sheaf))
    dim, maps = parabolic.hom_space(sheaf, other)
    payload = {
        "dimension": dim,
        "basis": [
            {
                jsonio.vec_to_key(lab.representative): jsonio.matrix_to_json(
                    sheaf.field, m.block(lab)
                )
                for lab in sorted(
                    sheaf.components, key=lambda la: la.normal_form
                )
                if other.dim(lab) and sheaf.dim(lab)
            }
            for m in maps
        ],
    }
    return payload, f"hom space dimension {dim}", EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monostack",
        description="Exact monoid/root-stack combinatorics with JSON I/O.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent output, add a summary on stderr")
    parser.add_argument("--field", default=None, help="coefficient field: Q or Fp:<prime> (env MONOSTACK_FIELD)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("monoid", help="inspect, saturate, or generate Hilbert bases")
    psub = p.add_subparsers(dest="action", required=True)
    for action in ("info", "hilbert", "saturate"):
        q = psub.add_parser(action)
        q.add_argument("input", nargs="?", help="monoid.json file, or - for stdin")
        q.set_defaults(func=cmd_monoid, action=action)

    p = sub.add_parser("delta", help="Delta points at a root level")
    p.add_argument("input", nargs="?")
    p.add_argument("--level", type=int, default=1)
    p.set_defaults(func=lambda a: cmd_delta(a, delta0_only=False))

    p = sub.add_parser("delta0", help="Delta0 points at a root level")
    p.add_argument("input", nargs="?")
    p.add_argument("--level", type=int, default=1)
    p.set_defaults(func=lambda a: cmd_delta(a, delta0_only=True))

    p = sub.add_parser("infquot", help="infinite-quotient check")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("check")
    q.add_argument("input", nargs="?")
    q.add_argument("--depth", type=int, default=4)
    q.set_defaults(func=cmd_infquot)

    p = sub.add_parser("kummer", help="Kummer test for a monoid homomorphism")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("check")
    q.add_argument("input", nargs="?")
    q.set_defaults(func=cmd_kummer)

    p = sub.add_parser("picard", help="level-n class group and coset labels")
    p.add_argument("input", nargs="?")
    p.add_argument("--level", type=int, default=1)
    p.set_defaults(func=cmd_picard)

    p = sub.add_parser("ideal", help="minimal generators of monomial ideals")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("mingens")
    q.add_argument("input", nargs="?")
    q.add_argument("--level", type=int, default=1)
    q.add_argument("--colon", help='colon pair "a;b" with comma-separated rational coordinates')
    q.add_argument("--generators", help='ideal generators "g1;g2;..."')
    q.add_argument("--bound", help="truncation bound for the region")
    q.set_defaults(func=cmd_ideal)

    p = sub.add_parser("probe", help="coherence probe across levels")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("coherence")
    q.add_argument("input", nargs="?")
    q.add_argument("--pair", required=True, help='degree pair "a;b"')
    q.add_argument("--levels", default="1,2,3,4")
    q.set_defaults(func=cmd_probe)

    p = sub.add_parser("parabolic", help="parabolic sheaf functors")
    psub = p.add_subparsers(dest="action", required=True)
    for action in ("to-graded", "from-graded", "restrict", "induce", "check-induced", "hom"):
        q = psub.add_parser(action)
        q.add_argument("input", nargs="?")
        q.add_argument("--to", type=int, help="target level for restrict/induce")
        q.add_argument("--divisor", type=int, help="divisor for check-induced")
        q.add_argument("--with", dest="with_sheaf", help="second sheaf for hom")
        q.set_defaults(func=cmd_parabolic, action=action)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, summary, code = args.func(args)
    except MalformedInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except MonostackError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except (ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    _emit(payload, summary if args.pretty else None, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: normalize, check, enumerate, idbasis, verify.
Exit codes: 0 success, 1 negative verdict, 2 parse/usage error,
3 resource limit.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .bracket import enumerate_completely_reduced
from .errors import ParseError, ResourceLimit
from .evaluation import is_weak_identity
from .fields import Field
from .identities import (
    DEFAULT_MAX_DEGREE,
    degree_multidegrees,
    identity_basis,
    verify_conjecture,
)
from .parser import format_poly, parse_poly
from .rewriter import normal_form


def _max_degree():
    raw = os.environ.get("WEYLPI_MAX_DEGREE")
    return int(raw) if raw else DEFAULT_MAX_DEGREE


def _parse_mdeg(text):
    try:
        delta = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"malformed multidegree {text!r}", 0)
    if not delta or any(d < 0 for d in delta):
        raise ParseError(f"malformed multidegree {text!r}", 0)
    return delta


def cmd_normalize(args):
    fieldobj = Field.parse(args.field)
    f = parse_poly(args.expr, fieldobj)
    if f.terms and max(len(w) for w in f.terms) > _max_degree():
        raise ResourceLimit("expression degree exceeds cap")
    trace = [] if args.trace else None
    forms = normal_form(f, trace=trace)
    if trace:
        for line in trace:
            print(f"trace: {line}")
    if args.json:
        payload = []
        for delta in sorted(forms):
            nf = forms[delta]
            payload.append(
                {
                    "mdeg": list(delta),
                    "beta": fieldobj.format(nf.beta),
                    "terms": [
                        {"coeff": fieldobj.format(c), "monomial": mono.format()}
                        for mono, c in nf.sorted_terms()
                    ],
                }
            )
        print(json.dumps(payload, sort_keys=True))
        return 0
    for delta in sorted(forms):
        nf = forms[delta]
        mdeg_txt = ",".join(str(d) for d in delta)
        print(f"mdeg=({mdeg_txt}) beta={fieldobj.format(nf.beta)}")
        for mono, c in nf.sorted_terms():
            print(f"  {fieldobj.format(c)} * {mono.format()}")
    return 0


def cmd_check(args):
    fieldobj = Field.parse(args.field)
    f = parse_poly(args.expr, fieldobj)
    if is_weak_identity(f):
        print("identity")
        return 0
    print("not-identity")
    return 1


def cmd_enumerate(args):
    delta = _parse_mdeg(args.mdeg)
    monos = enumerate_completely_reduced(delta)
    for mono in monos:
        print(mono.format())
    print(f"count={len(monos)}")
    return 0


def cmd_idbasis(args):
    fieldobj = Field.parse(args.field)
    delta = _parse_mdeg(args.mdeg)
    if sum(delta) > _max_degree():
        raise ResourceLimit("multidegree exceeds degree cap")
    for f in identity_basis(delta, fieldobj):
        print(format_poly(f))
    return 0


def _verify_worker(job):
    delta, p, cap = job
    report = verify_conjecture(delta, Field(p), max_degree=cap)
    return report.to_dict()


def cmd_verify(args):
    fieldobj = Field.parse(args.field)
    cap = _max_degree()
    if args.mdeg:
        deltas = [_parse_mdeg(args.mdeg)]
    else:
        deltas = degree_multidegrees(args.degree)
    jobs = [(delta, fieldobj.p, cap) for delta in deltas]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_worker, jobs))
    else:
        reports = [_verify_worker(job) for job in jobs]
    for rep in reports:
        print(
            "mdeg=({}) verdict={} n_reduced={} eval_rank={} dim_id={} dim_I={}".format(
                ",".join(str(d) for d in rep["mdeg"]),
                rep["verdict"],
                rep["n_reduced"],
                rep["eval_rank"],
                rep["dim_id"],
                rep["dim_I"],
            )
        )
    n_ok = sum(1 for rep in reports if rep["verdict"] == "Verified")
    print(f"summary: {n_ok}/{len(reports)} Verified")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"reports": reports}, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if n_ok == len(reports) else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="weylpi")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="completely reduced normal form")
    p.add_argument("--field", default="q")
    p.add_argument("--expr", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("check", help="weak-identity membership test")
    p.add_argument("--field", default="q")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="completely reduced monomials of a multidegree")
    p.add_argument("--mdeg", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("idbasis", help="basis of the weak-identity space")
    p.add_argument("--field", default="q")
    p.add_argument("--mdeg", required=True)
    p.set_defaults(func=cmd_idbasis)

    p = sub.add_parser("verify", help="conjecture verification per multidegree")
    p.add_argument("--field", default="q")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int)
    group.add_argument("--mdeg")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

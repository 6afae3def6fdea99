"""Command-line front end: ``arrcoh <command> FILE [options]``.

Exit codes: 0 success, 1 bad input, 2 CDO condition (or the central
formula's hypothesis) not met, 3 theorem/oracle mismatch, 4 oracle
unavailable for this input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .arrangement import betti_numbers, intersection_poset
from .density import ProjectiveClosure, SignLocalSystem, cdo_check
from .documents import DocumentError, load_document
from .engine import CDOViolation, HypothesisError, beta_sequence, lemma_central_cohomology, theorem_cohomology
from .salvetti import DEFAULT_MAX_CELLS, OracleUnavailable, SalvettiComplex, oracle_cohomology

EXIT_OK, EXIT_INPUT, EXIT_CDO, EXIT_MISMATCH, EXIT_ORACLE = 0, 1, 2, 3, 4

NOT_ASSERTED = "NOT ASSERTED BY THEOREM"


class CommandError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _signs_arg(text):
    try:
        signs = tuple(int(s) for s in text.replace(" ", "").split(",") if s)
        return SignLocalSystem(signs)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad sign list {text!r}: {exc}") from None


def build_parser():
    p = argparse.ArgumentParser(prog="arrcoh", description="Integral cohomology of sign local systems on hyperplane arrangement complements.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, signs=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="arrangement document (JSON)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if signs:
            sp.add_argument("--signs", type=_signs_arg, help="comma-separated +1/-1 list overriding the document's local_system")
        return sp

    add("poset", "flats of the intersection poset with Moebius values")
    add("betti", "Betti numbers b_i and the beta_i sequence")
    sp = add("dense-edges", "dense edges of the projective closure", signs=True)
    sp.add_argument("--all", action="store_true", help="include dense edges not contained in the hyperplane at infinity")
    add("cdo-check", "check the CDO condition", signs=True)
    sp = add("cohomology", "cohomology groups H^i(M, L)", signs=True)
    sp.add_argument("--method", choices=("theorem", "lemma", "oracle", "both"), default="theorem")
    sp.add_argument("--force", action="store_true", help="evaluate the theorem formula even when CDO fails")
    sp.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    sp = add("fuzz", "compare theorem and oracle on random sign systems")
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    return p


def _local_system(args, doc, required=True):
    ls = getattr(args, "signs", None) or doc.local_system
    if ls is None:
        if required:
            raise CommandError("no local system: give 'local_system' in the document or --signs", EXIT_INPUT)
        return None
    if len(ls) != len(doc.arrangement):
        raise CommandError(f"local system has {len(ls)} signs for {len(doc.arrangement)} hyperplanes", EXIT_INPUT)
    return ls


def _label(i):
    return f"H{i}"


def _edge_text(r):
    return "{" + ",".join(_label(i) for i in r.labels) + "}"


def cmd_poset(args, doc):
    poset = intersection_poset(doc.arrangement)
    flats = [{"hyperplanes": sorted(i + 1 for i in f.hyperplane_set), "codim": f.codim, "mobius": mu}
             for f, mu in zip(poset.flats, poset.mobius)]
    report = {"command": "poset", "dimension": doc.dimension, "flats": flats}
    lines = [f"{'flat':<24} codim  mobius"]
    for f in flats:
        name = "{" + ",".join(_label(i) for i in f["hyperplanes"]) + "}" if f["hyperplanes"] else "ambient"
        lines.append(f"{name:<24} {f['codim']:>5}  {f['mobius']:>6}")
    return report, lines, EXIT_OK


def cmd_betti(args, doc):
    b = betti_numbers(intersection_poset(doc.arrangement))
    beta = beta_sequence(b)
    report = {"command": "betti", "betti": b, "beta": beta}
    return report, [f"b    = {b}", f"beta = {beta}"], EXIT_OK


def cmd_dense_edges(args, doc):
    ls = _local_system(args, doc, required=False)
    edges = ProjectiveClosure(doc.arrangement).dense_edges(not args.all, ls)
    report = {"command": "dense-edges", "all": args.all, "edges": [e.to_dict() for e in edges]}
    lines = [f"{'edge':<24} pdim  at_inf  t"]
    for e in edges:
        t = "" if e.t_value is None else f"{e.t_value:+d}"
        lines.append(f"{_edge_text(e):<24} {e.projective_dim:>4}  {str(e.at_infinity):<6}  {t}")
    return report, lines, EXIT_OK


def cmd_cdo_check(args, doc):
    ls = _local_system(args, doc)
    ok, bad = cdo_check(doc.arrangement, ls)
    report = {"command": "cdo-check", "signs": list(ls.signs), "t0": ls.t0, "cdo": ok,
              "violations": [r.to_dict() for r in bad]}
    lines = [f"signs {list(ls.signs)}, t0 = {ls.t0:+d}", f"CDO condition: {'PASS' if ok else 'FAIL'}"]
    lines += [f"  violating dense edge {_edge_text(r)} (t = {r.t_value:+d})" for r in bad]
    return report, lines, EXIT_OK if ok else EXIT_CDO


def _profile_lines(p):
    tag = p.method if p.asserted else f"{p.method} ({NOT_ASSERTED})"
    return [f"[{tag}]"] + [f"  H^{i} = {g}" for i, g in enumerate(p.groups)]


def _oracle(arr, ls, max_cells):
    try:
        return oracle_cohomology(arr, ls, SalvettiComplex(arr, max_cells=max_cells))
    except OracleUnavailable as exc:
        raise CommandError(f"oracle unavailable: {exc}", EXIT_ORACLE) from None


def cmd_cohomology(args, doc):
    arr = doc.arrangement
    ls = _local_system(args, doc)
    closure = ProjectiveClosure(arr)
    ok, bad = cdo_check(arr, ls, closure)
    profiles = []
    code = EXIT_OK
    if args.method in ("theorem", "both"):
        try:
            profiles.append(theorem_cohomology(arr, ls, force=args.force, closure=closure))
        except CDOViolation as exc:
            lines = [str(exc)] + [f"  violating dense edge {_edge_text(r)} (t = {r.t_value:+d})" for r in exc.violations]
            report = {"command": "cohomology", "signs": list(ls.signs), "cdo": False,
                      "violations": [r.to_dict() for r in exc.violations], "profiles": []}
            return report, lines, EXIT_CDO
    if args.method == "lemma":
        try:
            profiles.append(lemma_central_cohomology(arr, ls))
        except HypothesisError as exc:
            raise CommandError(f"central formula not applicable: {exc}", EXIT_CDO) from None
    if args.method in ("oracle", "both"):
        profiles.append(_oracle(arr, ls, args.max_cells))
    agree = None
    if args.method == "both":
        agree = profiles[0].same_groups(profiles[1])
        # a mismatch only refutes something when the theorem is asserted
        if not agree and profiles[0].asserted:
            code = EXIT_MISMATCH
    report = {"command": "cohomology", "signs": list(ls.signs), "cdo": ok,
              "violations": [r.to_dict() for r in bad], "profiles": [p.to_dict() for p in profiles], "agree": agree}
    lines = [f"signs {list(ls.signs)}, CDO condition: {'PASS' if ok else 'FAIL'}"]
    for p in profiles:
        lines += _profile_lines(p)
    if agree is not None:
        lines.append("theorem and oracle agree" if agree else "MISMATCH between theorem and oracle")
    return report, lines, code


def cmd_fuzz(args, doc):
    arr = doc.arrangement
    d = len(arr)
    rng = random.Random(args.seed)
    closure = ProjectiveClosure(arr)
    try:
        sc = SalvettiComplex(arr, max_cells=args.max_cells)
    except OracleUnavailable as exc:
        raise CommandError(f"oracle unavailable: {exc}", EXIT_ORACLE) from None
    b = betti_numbers(intersection_poset(arr))
    euler = sum((-1) ** i * x for i, x in enumerate(b))
    cdo_cases = agreements = 0
    mismatches, invariant_failures, outside = [], [], {}
    for _ in range(args.count):
        ls = SignLocalSystem(tuple(rng.choice((1, -1)) for _ in range(d)))
        tc = sc.twisted(ls)
        groups = tc.cohomology()
        if tc.betti(2) != b or tc.euler_characteristic() != euler:
            invariant_failures.append(list(ls.signs))
        ok, _ = cdo_check(arr, ls, closure)
        if ok:
            cdo_cases += 1
            th = theorem_cohomology(arr, ls, closure=closure)
            if list(th.groups) == groups:
                agreements += 1
            else:
                mismatches.append(list(ls.signs))
        else:
            key = tuple(groups)
            outside[key] = outside.get(key, 0) + 1
    outside_sorted = sorted(outside.items(), key=lambda kv: [(g.rank, g.torsion) for g in kv[0]])
    report = {"command": "fuzz", "count": args.count, "seed": args.seed, "cdo_cases": cdo_cases,
              "agreements": agreements, "mismatches": mismatches, "non_cdo_cases": args.count - cdo_cases,
              "invariant_failures": invariant_failures,
              "non_cdo_profiles": [{"groups": [g.to_dict() for g in k], "count": v} for k, v in outside_sorted]}
    lines = [f"{args.count} random sign systems (seed {args.seed})",
             f"CDO cases: {cdo_cases}, theorem = oracle in {agreements}, mismatches: {len(mismatches)}",
             f"non-CDO cases: {args.count - cdo_cases}, invariant failures: {len(invariant_failures)}"]
    for k, v in outside_sorted:
        lines.append(f"  outside CDO x{v}: " + ", ".join(f"H^{i}={g}" for i, g in enumerate(k)))
    code = EXIT_MISMATCH if mismatches or invariant_failures else EXIT_OK
    return report, lines, code


COMMANDS = {
    "poset": cmd_poset,
    "betti": cmd_betti,
    "dense-edges": cmd_dense_edges,
    "cdo-check": cmd_cdo_check,
    "cohomology": cmd_cohomology,
    "fuzz": cmd_fuzz,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--signs -1,1" would otherwise be read as an unknown option
    for i in range(len(argv) - 1):
        if argv[i] == "--signs":
            argv[i:i + 2] = [f"--signs={argv[i + 1]}"]
            break
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc = load_document(args.input)
        report, lines, code = COMMANDS[args.command](args, doc)
    except DocumentError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except CommandError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.code
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

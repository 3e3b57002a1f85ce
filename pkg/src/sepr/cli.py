"""Command-line interface: ``sepr <subcommand> ...``.

Exit codes: 0 success, 1 a negative result (rule violation, mismatch,
failed identity, no witness found), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalog, rules, search
from .exactnum import RadicandMismatch
from .matrix import HermitianError, load_matrix, to_json
from .sequence import SequenceError, format_sequence, parse_sequence, sequences

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_compute(args) -> int:
    B = load_matrix(args.matrix)
    seqs = sequences(B)
    wanted = [k for k in ("pr", "epr", "sepr") if getattr(args, k)] or ["pr", "epr", "sepr"]
    payload = {k: seqs[k] for k in wanted}
    if len(wanted) == 1:
        text = seqs[wanted[0]]
    else:
        text = "\n".join(f"{k}: {seqs[k]}" for k in wanted)
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    rep = search.enumerate_candidates(args.order, args.cls, cap=args.cap)
    c = rep.counts()
    text = (f"order {rep.n}, {rep.mode}: {c['universe']} candidates, "
            f"{c['attainable-witnessed']} attainable-witnessed, {c['unattainable']} unattainable, "
            f"{c['rule-clean-unwitnessed']} rule-clean-unwitnessed")
    if args.verbose:
        lines = [text]
        lines += [f"  witnessed  {format_sequence(s)}" for s in rep.attainable_witnessed]
        lines += [f"  clean      {format_sequence(s)}" for s in rep.rule_clean_unwitnessed]
        lines += [f"  prohibited {format_sequence(s)}  {','.join(v)}" for s, v in rep.unattainable.items()]
        text = "\n".join(lines)
    _emit(args, rep.to_json(), text)
    return EXIT_NEGATIVE if rep.n <= 3 and rep.rule_clean_unwitnessed else EXIT_OK


_TABLE_ORDERS = {"order1": (1,), "order2": (2,), "order3": (3,), "all": (1, 2, 3)}


def _cmd_verify_tables(args) -> int:
    t0 = time.perf_counter()
    rep = catalog.verify_catalog(_TABLE_ORDERS[args.table])
    elapsed = time.perf_counter() - t0
    counts = " + ".join(str(v) for v in rep["counts"].values())
    text = (f"{counts} entries verified, {len(rep['mismatches'])} mismatches, "
            f"{len(rep['rule_failures'])} rule failures ({elapsed:.3f} s)")
    for m in rep["mismatches"]:
        text += f"\n  mismatch {m['label']}: {m['expression']} computes to {m['computed']}"
    for f in rep["rule_failures"]:
        text += f"\n  rule failure {f['label']} ({f['mode']}): {','.join(f['violations'])}"
    if args.export:
        entries = [e for e in catalog.export_catalog()
                   if len(parse_sequence(e["sequence"])) in _TABLE_ORDERS[args.table]]
        with open(args.export, "w") as fh:
            json.dump(entries, fh, indent=1)
            fh.write("\n")
    _emit(args, {**rep, "seconds": round(elapsed, 6)}, text)
    return EXIT_OK if rep["ok"] else EXIT_NEGATIVE


def _spec(args, n) -> search.GenSpec:
    return search.GenSpec(n=n, domain=args.entries, bound=args.entry_bound, symmetry=args.cls,
                          d=args.radicand, seed=args.seed)


def _cmd_check_identities(args) -> int:
    rep = search.identity_suite([_spec(args, args.order)], args.trials)
    out = rep.to_json()
    lines = [f"{args.trials} matrices of order {args.order}: {'all pass' if rep.ok else 'FAILURES'}"]
    for name, v in out["identities"].items():
        lines.append(f"  {name:16s} {v['checked']:7d} checked, {v['failed']} failed"
                     + (f"  first: {v['first_failure']}" if v["failed"] else ""))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _cmd_search(args) -> int:
    target = parse_sequence(args.target)
    n = args.order or len(target)
    B = search.search_witness(target, _spec(args, n), args.budget, exhaustive=args.exhaustive)
    seq = format_sequence(target)
    if B is None:
        _emit(args, {"target": seq, "found": False},
              f"no witness for {seq} found within {args.budget} trials")
        return EXIT_NEGATIVE
    rows = "\n".join("  [" + ", ".join(str(z) for z in row) + "]" for row in B.entries)
    _emit(args, {"target": seq, "found": True, "matrix": to_json(B)}, f"witness for {seq}:\n{rows}")
    return EXIT_OK


def _cmd_rules(args) -> int:
    if args.explain:
        r = rules.get_rule(args.explain)
        _emit(args, r.describe(), rules.explain(args.explain))
        return EXIT_OK
    if args.check:
        v = rules.check_sequence(args.check, None, args.cls, lookup_witness=True)
        text = f"{format_sequence(v.sequence)}: {v.status}"
        if v.violations:
            text += " (" + ", ".join(v.violations) + ")"
        if v.witness_ref:
            text += f", witness {catalog.witness(v.sequence).expression}"
        _emit(args, v.to_json(), text)
        return EXIT_NEGATIVE if v.violations else EXIT_OK
    cat = rules.rule_catalog()
    text = "\n".join(f"{r.id:4s} {r.scope:20s} {r.name:18s} {r.pattern}" for r in cat)
    _emit(args, [r.describe() for r in cat], text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    cls = argparse.ArgumentParser(add_help=False)
    cls.add_argument("--class", dest="cls", choices=rules.MODES, default=rules.HERMITIAN)
    gen = argparse.ArgumentParser(add_help=False)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--entry-bound", type=int, default=2)
    gen.add_argument("--radicand", type=int, default=0)
    gen.add_argument("--entries", choices=search.DOMAINS, default="gaussian")

    p = _Parser(prog="sepr", description="Signed enhanced principal rank sequences of Hermitian matrices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", parents=[common], help="sequences of a matrix file")
    c.add_argument("matrix", help="JSON matrix file")
    c.add_argument("--sepr", action="store_true")
    c.add_argument("--epr", action="store_true")
    c.add_argument("--pr", action="store_true")
    c.set_defaults(func=_cmd_compute)

    e = sub.add_parser("enumerate", parents=[common, cls], help="partition all candidates of an order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--cap", type=int, default=search.ENUMERATION_CAP)
    e.add_argument("--verbose", action="store_true")
    e.set_defaults(func=_cmd_enumerate)

    v = sub.add_parser("verify-tables", parents=[common], help="recompute every catalog witness")
    v.add_argument("--table", choices=tuple(_TABLE_ORDERS), default="all")
    v.add_argument("--export", metavar="PATH", help="write the catalog as JSON")
    v.set_defaults(func=_cmd_verify_tables)

    ci = sub.add_parser("check-identities", parents=[common, cls, gen], help="fuzz the determinantal identities")
    ci.add_argument("--order", type=int, required=True)
    ci.add_argument("--trials", type=int, default=100)
    ci.set_defaults(func=_cmd_check_identities)

    s = sub.add_parser("search", parents=[common, cls, gen], help="hunt for a witness matrix")
    s.add_argument("--target", required=True)
    s.add_argument("--order", type=int)
    s.add_argument("--budget", type=int, default=10000)
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=_cmd_search)

    r = sub.add_parser("rules", parents=[common, cls], help="list, explain or apply the rules")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--explain", metavar="ID")
    g.add_argument("--check", metavar="SEQ")
    r.set_defaults(func=_cmd_rules)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HermitianError, SequenceError, RadicandMismatch, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"sepr {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

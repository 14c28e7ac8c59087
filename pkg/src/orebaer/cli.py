"""Command-line front end: ``orebaer ring|check|ore|verify``.

Exit codes: 0 ok, 1 error, 2 refuted (or an unexpected verify outcome),
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import expr as _expr
from .errors import BudgetExceeded, OreBaerError, ParseError
from .maps import context_from_rules
from .ore import DEFAULT_BUDGET, OrePoly, idempotent_search, monomial_shift
from .properties import annihilator_idempotent_witness, audit_hypotheses
from .registry import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    PROPERTIES,
    ExampleRecord,
    Instance,
    ReportEntry,
    default_registry,
    entry_from_verdict,
    run_property,
    verify_all,
    verify_claim,
    verify_example,
)
from .report import build_report, to_json, to_text
from .ring import DEFAULT_MAX_ORDER, construct_ring, idempotent_set

EXIT_OK, EXIT_ERROR, EXIT_REFUTED, EXIT_BUDGET = 0, 1, 2, 3

NEEDS_CONTEXT = {"rigid", "compatible", "stability", "skew_armendariz", "stable_left_semicentral",
                 "sigma_automorphism", "construction", "matrix_units"}
TABLE_LIMIT = 16


class UsageError(OreBaerError):
    pass


# ---------------------------------------------------------------------------
# target resolution
# ---------------------------------------------------------------------------


def _read_json(path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None


def resolve(target, seed=DEFAULT_SEED, max_order=DEFAULT_MAX_ORDER):
    """Registry id, ring/example JSON file, or ring shorthand -> (Instance, has_context)."""
    reg = default_registry()
    if target in reg.examples:
        return reg.instantiate(target, seed), True
    path = Path(target)
    if path.suffix == ".json" or path.exists():
        data = _read_json(path)
        if isinstance(data, dict) and "ring" in data:
            data = {"id": path.stem, **data}
            rec = ExampleRecord.from_json(data)
            ring = construct_ring(rec.ring, max_order=max_order)
            ctx = context_from_rules(ring, rec.sigma, rec.delta, name=rec.id)
            return Instance(rec, ring, ctx, seed), True
        ring = construct_ring(data, max_order=max_order)
        rec = ExampleRecord(path.stem, ring=data)
    else:
        ring = construct_ring(target, max_order=max_order)
        rec = ExampleRecord(target, ring=ring.descriptor)
    return Instance(rec, ring, context_from_rules(ring), seed), False


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _table_lines(ring, table, op):
    names = list(ring.elem_names)
    w = max(len(n) for n in names)
    head = f"{op:>{w}} | " + " ".join(f"{n:>{w}}" for n in names)
    lines = [head, "-" * len(head)]
    for a in range(ring.order):
        lines.append(f"{names[a]:>{w}} | " + " ".join(f"{names[int(table[a, b])]:>{w}}" for b in range(ring.order)))
    return lines


def cmd_ring(args, out):
    inst, has_ctx = resolve(args.target, max_order=args.max_order)
    ring = inst.ring
    if args.action == "validate":
        mode = "exhaustive" if ring.order <= 512 else "sampled"
        out.write(f"{args.target}: ring axioms hold ({mode} scan, order {ring.order})\n")
        if has_ctx:
            kind = "automorphism" if inst.ctx.sigma.is_automorphism else "endomorphism"
            out.write(f"sigma: valid {kind}; delta: valid sigma-derivation\n")
        return EXIT_OK
    out.write(f"ring: {args.target}\n")
    out.write(f"kind: {ring.kind}\norder: {ring.order}\ncharacteristic: {ring.characteristic}\n")
    out.write(f"commutative: {str(ring.is_commutative).lower()}\n")
    if ring.order <= 64:
        out.write("elements: {" + ", ".join(ring.elem_names) + "}\n")
    classes = idempotent_set(ring)
    out.write("idempotents: {" + ", ".join(ring.name(c.index) for c in classes) + "}\n")
    for c in classes:
        tags = [t for t, f in (("central", c.is_central), ("left semicentral", c.is_left_semicentral),
                               ("right semicentral", c.is_right_semicentral)) if f]
        out.write(f"  {ring.name(c.index)}: {', '.join(tags) or 'not semicentral'}\n")
    if has_ctx:
        s, d = inst.ctx.sigma, inst.ctx.delta
        out.write(f"sigma: {'automorphism' if s.is_automorphism else 'endomorphism'}; "
                  f"delta: {'zero' if d.is_zero else 'nonzero'}\n")
        if inst.record.analog_note and not inst.record.analog_note.startswith("exact"):
            out.write(f"analog: {inst.record.analog_note}\n")
    if ring.order <= TABLE_LIMIT and not args.no_tables:
        out.write("\n".join(_table_lines(ring, ring.add_table, "+")) + "\n\n")
        out.write("\n".join(_table_lines(ring, ring.mul_table, "*")) + "\n")
    return EXIT_OK


def _construction_entry(inst, args):
    gens = [inst.poly(g) for g in args.gens] or [OrePoly.constant(inst.ctx, inst.ring.one)]
    hyp = audit_hypotheses(inst.ctx)
    rep = annihilator_idempotent_witness(inst.ctx, gens, args.max_degree, enforce_hypotheses=False, hypotheses=hyp)
    failed = [k for k, h in hyp.items() if not h["ok"]]
    detail = {"report": rep.to_json()}
    if failed:
        status, witness = "hypothesis_not_met", None
        detail["hypotheses_failed"] = failed
        detail["subchecks_passed_anyway"] = rep.passed or rep.rejected
    elif rep.rejected or rep.passed:
        status, witness = "certified_bounded", None
    else:
        status, witness = "refuted", {"failed_subchecks": rep.failed_subchecks()}
    return ReportEntry(f"{inst.record.id}/construction", status, witness=witness,
                       bound={"max_degree": args.max_degree}, mode="exhaustive", elapsed_ms=rep.elapsed_ms,
                       analog_note=inst.record.analog_note, detail=detail)


def cmd_check(args, out):
    prop = args.property.replace("-", "_")
    if prop not in PROPERTIES and prop != "construction":
        raise UsageError(f"unknown property {args.property!r}; expected one of "
                         + ", ".join(sorted(p.replace("_", "-") for p in (*PROPERTIES, "construction"))))
    inst, has_ctx = resolve(args.target, args.seed, args.max_order)
    if prop in NEEDS_CONTEXT and not has_ctx:
        raise UsageError(f"property {args.property!r} needs sigma and delta; give a registry id or an example file")
    if prop == "construction":
        entry = _construction_entry(inst, args)
    else:
        params = {}
        if prop == "stability":
            if args.idempotent is None:
                raise UsageError("stability needs --idempotent")
            params["idempotent"] = args.idempotent
        if prop == "idempotent_class":
            params["element"] = args.idempotent
        if prop == "skew_armendariz":
            params = {"deg_p": args.max_degree, "deg_q": args.max_degree, "mode": args.mode, "trials": args.trials}
        verdict = run_property(inst, prop, params, budget=args.budget)
        entry = entry_from_verdict(f"{inst.record.id}/{prop}", verdict, analog_note=inst.record.analog_note)
    report = build_report("check", _args_dict(args), [entry])
    out.write(to_json(report) if args.format == "json" else to_text(report))
    return EXIT_REFUTED if entry.status == "refuted" else EXIT_OK


def cmd_ore(args, out):
    inst, _ = resolve(args.context)
    ctx = inst.ctx
    P = [inst.poly(p) for p in args.operands] if args.op not in ("shift", "idempotents") else []
    arity = {"mul": 2, "add": 2, "eq": 2, "neg": 1}
    if args.op in arity and len(P) != arity[args.op]:
        raise UsageError(f"ore {args.op} takes {arity[args.op]} polynomial literal(s)")
    if args.op == "mul":
        result = P[0] * P[1]
    elif args.op == "add":
        result = P[0] + P[1]
    elif args.op == "neg":
        result = -P[0]
    elif args.op == "eq":
        out.write(("true" if P[0] == P[1] else "false") + "\n")
        return EXIT_OK
    elif args.op == "shift":
        if len(args.operands) != 2:
            raise UsageError("ore shift takes an exponent and an element")
        result = monomial_shift(ctx, int(args.operands[0]), _expr.element(ctx.ring, args.operands[1]))
    else:
        for e in idempotent_search(ctx, args.max_degree, args.budget):
            out.write(e.literal() + "\n")
        return EXIT_OK
    out.write(result.literal() + (f"    {result.pretty()}" if args.pretty else "") + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    reg = default_registry()
    target = args.target
    if target == "all":
        entries = verify_all(seed=args.seed)
    elif target in reg.claims:
        entries = verify_claim(target, seed=args.seed)
    elif target in reg.examples:
        entries = verify_example(target, seed=args.seed)
    else:
        raise UsageError(f"unknown claim or example {target!r}")
    report = build_report("verify", _args_dict(args), entries)
    text = to_json(report) if args.format == "json" else to_text(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if report["summary"]["all_expectations_met"] else EXIT_REFUTED


def _args_dict(args):
    skip = {"func", "output"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="orebaer", description="Finite rings, Ore extensions and quasi-Baer checks.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("ring", help="show or validate a ring")
    r.add_argument("action", choices=["show", "validate"])
    r.add_argument("target", help="registry id, shorthand such as modular:6, or a JSON descriptor file")
    r.add_argument("--no-tables", action="store_true")
    r.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    r.set_defaults(func=cmd_ring)

    c = sub.add_parser("check", help="run one property checker")
    c.add_argument("property")
    c.add_argument("target")
    c.add_argument("--max-degree", type=int, default=2)
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--seed", type=int, default=DEFAULT_SEED)
    c.add_argument("--mode", choices=["exhaustive", "randomized"], default="exhaustive")
    c.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    c.add_argument("--idempotent", help="element expression for stability checks")
    c.add_argument("--gens", action="append", default=[], help="ideal generator (construction check); repeatable")
    c.add_argument("--format", choices=["json", "text"], default="text")
    c.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("ore", help="arithmetic in R[x; sigma, delta]")
    o.add_argument("op", choices=["mul", "add", "neg", "eq", "shift", "idempotents"])
    o.add_argument("context")
    o.add_argument("operands", nargs="*")
    o.add_argument("--pretty", action="store_true")
    o.add_argument("--max-degree", type=int, default=2)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.set_defaults(func=cmd_ore)

    v = sub.add_parser("verify", help="run claims and example expectations")
    v.add_argument("target", help="'all', a claim id or an example id")
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc.required} candidates needed, budget {exc.budget}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OreBaerError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

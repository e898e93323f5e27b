"""Command line interface: ``gsb verify|complete|reduce|enumerate|hnn|alt``.

Reports are ``key: value`` lines (``--json`` for JSON).  Exit codes: 0 pass,
1 property fails, 2 parse/input error, 3 budget exceeded, 4 completion
refused for a non-monomial order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import alt as altmod
from . import hnn as hnnmod
from .freealg import Poly
from .groups import GroupAxiomError
from .io import ParseError, emit_presentation, load_hnn, load_presentation
from .orders import OrderBudgetExceeded
from .rewrite import (
    BudgetExceeded,
    NonMonomialOrder,
    Presentation,
    check_condition_A,
    is_gs_basis,
    normal_form,
    red_enumerate,
    shirshov_complete,
)

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_REFUSED = 0, 1, 2, 3, 4


class Output:
    """Collects ordered key/value pairs and renders them as text or JSON."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def render(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.as_json:
            data: dict = {}
            repeated = set()
            for k, v in self.items:
                if k not in data:
                    data[k] = v
                    continue
                if k not in repeated:
                    data[k] = [data[k]]
                    repeated.add(k)
                data[k].append(v)
            json.dump(data, stream, indent=2, sort_keys=False)
            stream.write("\n")
            return
        for k, v in self.items:
            if isinstance(v, bool):
                v = "true" if v else "false"
            elif isinstance(v, list):
                for item in v:
                    stream.write(f"{k}: {item}\n")
                continue
            stream.write(f"{k}: {v}\n")


def _word_list(alphabet, words):
    return [alphabet.format_word(w) for w in words]


def _gs_report(out: Output, p: Presentation, rep) -> None:
    a = p.alphabet
    out.add("rules", rep.n_rules)
    out.add("compositions", rep.n_compositions)
    out.add("failed", len(rep.failures))
    if rep.cd_bound is not None:
        out.add("cd_bound", rep.cd_bound)
    for f in rep.failures:
        item = f.item
        if f.residue:
            reason = f"residue {f.residue.format(p.order)}"
        elif f.order_violation is not None:
            reason = "certificate step not below w"
        else:
            n, c, d = f.context_violation
            reason = f"context c={a.format_word(c)} d={a.format_word(d)} breaks step {n}"
        out.add("failure", f"{item.kind} w={a.format_word(item.w)} rules=({item.i},{item.j}): {reason}")


def cmd_verify(args) -> int:
    p = load_presentation(args.file)
    out = Output(args.json)
    ok = True
    out.add("order", "monomial" if p.order.monomial else "non-monomial")
    if not p.order.monomial:
        ca = check_condition_A(p, args.ab_bound)
        out.add("condition_a", "pass" if ca.passed else "fail")
        out.add("ab_bound", args.ab_bound)
        if not ca.passed:
            ri, a, b, u = ca.witness
            fmt = p.alphabet.format_word
            out.add("condition_a_witness", f"rule={ri} a={fmt(a)} b={fmt(b)} word={fmt(u)}")
        ok = ca.passed
    rep = is_gs_basis(p, cd_bound=args.cd_bound if not p.order.monomial else None)
    _gs_report(out, p, rep)
    ok = ok and rep.passed
    out.items.insert(0, ("status", "pass" if ok else "fail"))
    out.render()
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_complete(args) -> int:
    p = load_presentation(args.file)
    try:
        c = shirshov_complete(p, max_rules=args.max_rules, max_degree=args.max_deg, max_iterations=args.max_iter)
    except NonMonomialOrder as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    text = emit_presentation(c)
    if args.output:
        Path(args.output).write_text(text)
    out = Output(args.json)
    out.add("status", "complete" if c.complete else "incomplete")
    out.add("rules", len(c.rules))
    if not args.output:
        out.add("rule", [c.format_rule(r) for r in sorted(c.rules, key=lambda r: c.order.key(r.lead))])
    out.render()
    return EXIT_PASS if c.complete else EXIT_BUDGET


def cmd_reduce(args) -> int:
    p = load_presentation(args.file)
    w = _parse_word(p.alphabet, args.word)
    nf = normal_form(Poly.word(p.alphabet, w), p)
    if args.json:
        json.dump({"input": args.word, "normal_form": nf.format(p.order)}, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(nf.format(p.order))
    return EXIT_PASS


def _enumerate_output(out: Output, alphabet, res) -> None:
    out.add("word", _word_list(alphabet, res.words))
    out.add("count", len(res.words))
    out.add("finite", res.finite)
    if not res.finite:
        out.add("max_len", res.maxlen_reached)


def cmd_enumerate(args) -> int:
    p = load_presentation(args.file)
    res = red_enumerate(p, maxlen=args.max_len, max_words=args.max_words)
    out = Output(args.json)
    _enumerate_output(out, p.alphabet, res)
    out.render()
    return EXIT_PASS


def _parse_word(alphabet, text):
    try:
        return alphabet.parse_word(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# hnn


def cmd_hnn_build(args) -> int:
    inst = load_hnn(args.group)
    p = inst.presentation
    src = os.path.relpath(Path(args.group).resolve(), Path(args.output).resolve().parent)
    Path(args.output).write_text(emit_presentation(p, hnn_source=src))
    out = Output(args.json)
    out.add("rules", len(p.rules))
    out.add("alphabet", " ".join(p.alphabet.names))
    out.render()
    return EXIT_PASS


def cmd_hnn_verify(args) -> int:
    inst = load_hnn(args.group)
    rep = hnnmod.verify_hnn_instance(inst, ab_bound=args.ab_bound, cd_bound=args.cd_bound)
    out = Output(args.json)
    out.add("status", "pass" if rep.passed else "fail")
    out.add("condition_a", "pass" if rep.condition_a.passed else "fail")
    out.add("ab_bound", rep.ab_bound)
    _gs_report(out, inst.presentation, rep.gs)
    out.render()
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_hnn_nf(args) -> int:
    inst = load_hnn(args.group)
    w = _parse_word(inst.alphabet, args.word)
    nf = hnnmod.hnn_normal_form(inst, w)
    if args.json:
        json.dump({"input": args.word, "normal_form": inst.format(nf)}, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(inst.format(nf))
    return EXIT_PASS


def cmd_hnn_shape(args) -> int:
    inst = load_hnn(args.group)
    w = _parse_word(inst.alphabet, args.word)
    s = hnnmod.check_britton_shape(inst, w)
    out = Output(args.json)
    out.add("status", "pass" if s.passed else "fail")
    out.add("in_shape", s.in_shape)
    out.add("a_reps", s.a_reps)
    out.add("b_reps", s.b_reps)
    out.add("no_pinch", s.no_pinch)
    out.add("tail_free", s.tail_free)
    out.render()
    return EXIT_PASS if s.passed else EXIT_FAIL


# alt


def cmd_alt_build(args) -> int:
    inst = altmod.build_alt(args.n)
    Path(args.output).write_text(emit_presentation(inst.gsbasis))
    out = Output(args.json)
    out.add("n", args.n)
    out.add("rules", len(inst.gsbasis.rules))
    out.render()
    return EXIT_PASS


def cmd_alt_verify(args) -> int:
    inst = altmod.build_alt(args.n)
    rep = altmod.verify_alt_gsb(inst)
    out = Output(args.json)
    out.add("status", "pass" if rep.passed else "fail")
    out.add("n", args.n)
    _gs_report(out, inst.gsbasis, rep.gs)
    for lhs, rhs, res in rep.membership:
        out.add("relation_residue", f"{inst.format(lhs)} = {inst.format(rhs)}: {res.format(inst.order)}")
    out.render()
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_alt_enumerate(args) -> int:
    inst = altmod.build_alt(args.n)
    en = altmod.enumerate_alt_normal_forms(inst)
    out = Output(args.json)
    out.add("word", _word_list(inst.alphabet, en.words))
    out.add("count", en.count)
    out.add("finite", en.finite)
    out.add("expected", inst.order_size)
    out.add("shape_mismatches", len(en.shape_mismatches))
    out.render()
    ok = en.finite and en.count == inst.order_size
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_alt_check(args) -> int:
    inst = altmod.build_alt(args.n)
    rc = altmod.check_defining_relations(inst)
    bj = altmod.alt_bijection_check(inst)
    out = Output(args.json)
    ok = rc.passed and bj.passed
    out.add("status", "pass" if ok else "fail")
    out.add("relations_checked", rc.checked)
    out.add("relations_failed", len(rc.failures))
    out.add("generators_even", rc.generators_even)
    for src, lhs, rhs in rc.failures:
        out.add("relation_failure", f"({src}) {inst.format(lhs)} = {inst.format(rhs)}")
    out.add("normal_forms", bj.n_forms)
    out.add("distinct_images", bj.n_distinct)
    out.add("group_order", bj.group_order)
    out.add("bijection", bj.passed)
    out.render()
    return EXIT_PASS if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="gsb", description="Gröbner–Shirshov basis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the GS basis property")
    p.add_argument("file")
    p.add_argument("--cd-bound", type=int, default=2)
    p.add_argument("--ab-bound", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complete", parents=[common], help="Shirshov completion")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--max-rules", type=int, default=500)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enumerate", parents=[common], help="list Red(S)")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--max-words", type=int, default=100_000)
    p.set_defaults(func=cmd_enumerate)

    hnn = sub.add_parser("hnn", help="HNN extensions of finite groups")
    hsub = hnn.add_subparsers(dest="hnn_command", required=True)
    p = hsub.add_parser("build", parents=[common])
    p.add_argument("group")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_hnn_build)
    p = hsub.add_parser("verify", parents=[common])
    p.add_argument("group")
    p.add_argument("--ab-bound", type=int, default=3)
    p.add_argument("--cd-bound", type=int, default=2)
    p.set_defaults(func=cmd_hnn_verify)
    p = hsub.add_parser("nf", parents=[common])
    p.add_argument("group")
    p.add_argument("word")
    p.set_defaults(func=cmd_hnn_nf)
    p = hsub.add_parser("shape", parents=[common])
    p.add_argument("group")
    p.add_argument("word")
    p.set_defaults(func=cmd_hnn_shape)

    alt = sub.add_parser("alt", help="alternating groups")
    asub = alt.add_subparsers(dest="alt_command", required=True)
    p = asub.add_parser("build", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_alt_build)
    for name, func in (("verify", cmd_alt_verify), ("enumerate", cmd_alt_enumerate), ("check", cmd_alt_check)):
        p = asub.add_parser(name, parents=[common])
        p.add_argument("n", type=int)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GroupAxiomError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, OrderBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

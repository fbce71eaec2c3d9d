"""Command-line driver.

Exit codes: 0 success (or property holds), 1 property fails, 2 parse or usage
error, 3 type error, 4 fuel exhausted, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from tait.errors import KernelError, TypingError
from tait.frontend.parse import SourceSpan, parse_context, parse_term, parse_type
from tait.frontend.pretty import pretty_mltt, pretty_stlc, pretty_stlc_type, pretty_sysf, pretty_sysf_type
from tait.frontend.relfile import parse_relfile
from tait.mltt import enumerate as menum
from tait.mltt import kernel as mc
from tait.mltt import nbe as mn
from tait.stlc import nbe, oracle, set_model
from tait.stlc import syntax as ss
from tait.systemf import enumerate as fenum
from tait.systemf import param
from tait.systemf import syntax as fs

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_TYPE, EXIT_FUEL, EXIT_INTERNAL = range(6)


class UsageError(KernelError):
    exit_code = EXIT_PARSE
    kind = "usage"


class Outcome:
    """What a command produced; rendered as text or JSON by ``cli_run``."""

    def __init__(self, result=None, normal_form=None, verdict=None, lines=None, holds=True):
        self.result = result
        self.normal_form = normal_form
        self.verdict = verdict
        self.lines = lines if lines is not None else []
        self.holds = holds


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--calculus", choices=("stlc", "mltt", "sysf"), default="stlc")
    common.add_argument("--fuel", type=int, default=10_000)
    common.add_argument("--max-size", type=int, default=3)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--type", dest="type_src", help="type ascription")
    common.add_argument("--ctx", default="", help="context, e.g. 'f : Ans -> Ans, x : Ans'")
    common.add_argument("--rel", action="append", default=[], help="relation instance file (repeatable)")

    parser = argparse.ArgumentParser(prog="tait", description="Normalization by evaluation and parametricity checks for small type theories.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "normalize", "canonicity"):
        sub.add_parser(name, parents=[common]).add_argument("term")
    sub.add_parser("consistency", parents=[common])
    eq = sub.add_parser("oracle-eq", parents=[common])
    eq.add_argument("left")
    eq.add_argument("right")
    sub.add_parser("enumerate", parents=[common])
    sub.add_parser("free-theorem", parents=[common]).add_argument("term", nargs="?")
    return parser


def _source(arg: str, stdin, args) -> str:
    """The text of a term argument; errors without a position get pinned to it."""
    text = stdin.read() if arg == "-" else arg
    args.sources.append(text)
    return text


def _whole(text: str) -> SourceSpan:
    return SourceSpan(0, len(text), 1, 1)


# ---------------------------------------------------------------------------
# Per-calculus helpers


def _stlc_ctx(args):
    entries = parse_context(args.ctx, "stlc")
    return [n for n, _ in entries], tuple(ty for _, ty in entries)


def _mltt_ctx(args):
    entries = parse_context(args.ctx, "mltt")
    return [n for n, _ in entries], mc.context(entries)


def _mltt_is_type(t) -> bool:
    return isinstance(t, (mc.s.Ans, mc.s.U, mc.s.El, mc.s.Pi, mc.s.Sigma))


def _mltt_typed(args, src):
    names, ctx = _mltt_ctx(args)
    t = parse_term(src, "mltt", names)
    if args.type_src is None and _mltt_is_type(t):
        mc.check_type(ctx, t)
        return names, ctx, t, None
    if args.type_src is not None:
        ty = parse_type(args.type_src, "mltt", names)
        mc.check_type(ctx, ty)
        tyv = ctx.eval(ty)
        mc.check(ctx, t, tyv)
    else:
        tyv = mc.infer(ctx, t)
    return names, ctx, t, tyv


def _require(args, *calculi):
    if args.calculus not in calculi:
        raise UsageError(f"{args.command} is not available for --calculus {args.calculus}")


# ---------------------------------------------------------------------------
# Commands


def cmd_check(args, stdin) -> Outcome:
    src = _source(args.term, stdin, args)
    match args.calculus:
        case "stlc":
            names, ctx = _stlc_ctx(args)
            t = parse_term(src, "stlc", names)
            ty = ss.infer(ctx, t)
            if args.type_src is not None:
                want = parse_type(args.type_src, "stlc")
                if want != ty:
                    raise TypingError(f"term has type {ty}, not {want}")
            text = pretty_stlc_type(ty)
        case "mltt":
            names, ctx, _, tyv = _mltt_typed(args, src)
            if tyv is None:
                text = "Type"
            else:
                text = pretty_mltt(mn.embed_nf(mn.reify_ty(tyv, len(ctx)), len(ctx)), names)
        case _:
            t = parse_term(src, "sysf")
            ty = fs.f_infer(0, (), t)
            if args.type_src is not None and parse_type(args.type_src, "sysf") != ty:
                raise TypingError(f"term has type {pretty_sysf_type(ty)}, not {args.type_src}")
            text = pretty_sysf_type(ty)
    return Outcome(result={"type": text}, lines=[text])


def cmd_normalize(args, stdin) -> Outcome:
    src = _source(args.term, stdin, args)
    match args.calculus:
        case "stlc":
            names, ctx = _stlc_ctx(args)
            t = parse_term(src, "stlc", names)
            ty = ss.infer(ctx, t)
            text = pretty_stlc(nbe.embed_nf(nbe.normalize(ctx, t), len(ctx)), names)
            type_text = pretty_stlc_type(ty)
        case "mltt":
            names, ctx, t, tyv = _mltt_typed(args, src)
            d = len(ctx)
            if tyv is None:
                text = pretty_mltt(mn.embed_nf(mn.reify_ty(ctx.eval(t), d), d), names)
                type_text = "Type"
            else:
                text = pretty_mltt(mn.embed_nf(mn.reify(tyv, ctx.eval(t), d), d), names)
                type_text = pretty_mltt(mn.embed_nf(mn.reify_ty(tyv, d), d), names)
        case _:
            t = parse_term(src, "sysf")
            ty = fs.f_infer(0, (), t)
            text = pretty_sysf(fs.f_normalize(t, args.fuel))
            type_text = pretty_sysf_type(ty)
    return Outcome(result={"type": type_text}, normal_form=text, lines=[text])


def cmd_canonicity(args, stdin) -> Outcome:
    _require(args, "stlc", "mltt")
    src = _source(args.term, stdin, args)
    if args.calculus == "stlc":
        verdict = nbe.canonicity(parse_term(src, "stlc"))
    else:
        t = parse_term(src, "mltt")
        if args.type_src is not None:
            t = mc.s.Ann(t, parse_type(args.type_src, "mltt"))
        verdict = mc.d_canonicity(t)
    return Outcome(result=verdict.value, normal_form=verdict.value, verdict=verdict.value, lines=[verdict.value])


def cmd_consistency(args, stdin) -> Outcome:
    _require(args, "stlc")
    model = set_model.consistency_check()
    rewriting = not oracle.oracle_equal((), ss.YES, ss.NO, args.fuel)
    nbe_distinct = nbe.normalize((), ss.YES) != nbe.normalize((), ss.NO)
    holds = model and rewriting and nbe_distinct
    result = {"set_model": model, "oracle": rewriting, "normalize": nbe_distinct}
    lines = [
        f"set model: [[yes]] = {set_model.interp_tm((), (), ss.YES)}, [[no]] = {set_model.interp_tm((), (), ss.NO)}",
        f"yes = no derivable: {'no' if holds else 'yes'}",
        "consistent" if holds else "INCONSISTENT",
    ]
    return Outcome(result=result, verdict="consistent" if holds else "inconsistent", lines=lines, holds=holds)


def cmd_oracle_eq(args, stdin) -> Outcome:
    _require(args, "stlc")
    names, ctx = _stlc_ctx(args)
    left_src = _source(args.left, stdin, args)
    left = parse_term(left_src, "stlc", names)
    try:
        ss.infer(ctx, left)
    except KernelError as err:
        err.span = _whole(left_src)
        raise
    right = parse_term(_source(args.right, stdin, args), "stlc", names)
    equal = oracle.oracle_equal(ctx, left, right, args.fuel)
    text = pretty_stlc(oracle.long_normal_form(ctx, left, args.fuel), names)
    return Outcome(result=equal, normal_form=text, lines=["true" if equal else "false"], holds=equal)


def cmd_enumerate(args, stdin) -> Outcome:
    if args.type_src is None:
        raise UsageError("enumerate needs --type")
    if args.max_size < 1:
        raise UsageError("--max-size must be at least 1")
    if args.calculus == "stlc":
        names, ctx = _stlc_ctx(args)
        ty = parse_type(args.type_src, "stlc")
        terms = [pretty_stlc(t, names) for t in oracle.enumerate_terms(ctx, ty, args.max_size)]
    elif args.calculus == "mltt":
        names, ctx = _mltt_ctx(args)
        ty = parse_type(args.type_src, "mltt", names)
        mc.check_type(ctx, ty)
        found = menum.Enumerator().terms(ctx, ctx.eval(ty), args.max_size)
        terms = [pretty_mltt(t, names) for t in found]
    else:
        ty = parse_type(args.type_src, "sysf")
        terms = [pretty_sysf(t) for t in fenum.long_normal_inhabitants(ty, args.max_size)]
    return Outcome(result=terms, lines=terms)


def cmd_free_theorem(args, stdin) -> Outcome:
    _require(args, "sysf")
    if args.type_src is None:
        raise UsageError("free-theorem needs --type")
    ty, free = parse_type(args.type_src, "sysf", free_types=True)
    statement = param.free_theorem_print(ty, free_names=free)
    if args.term is None:
        return Outcome(result={"statement": statement}, lines=[statement])
    if free:
        raise UsageError("checking a term needs a closed --type")
    t = parse_term(_source(args.term, stdin, args), "sysf")
    instantiations, candidates = [], []
    for path in args.rel:
        with open(path, encoding="utf-8") as fh:
            rel = parse_relfile(fh.read())
        instantiations.append(rel.instances)
        candidates.extend(rel.candidates)
    verdict = param.free_theorem_check(t, ty, instantiations, candidates, args.fuel)
    lines = [statement]
    result = {"statement": statement, "instantiations": len(instantiations)}
    if isinstance(verdict, param.Fail):
        w = verdict.witness
        witness = {
            "left": pretty_sysf(w.left),
            "right": pretty_sysf(w.right),
            "arguments": [[pretty_sysf(a), pretty_sysf(b)] for a, b in w.arguments],
        }
        result["witness"] = witness
        lines.append(f"FAIL: ({witness['left']}, {witness['right']}) is not in the relation")
        return Outcome(result=result, verdict="fail", lines=lines, holds=False)
    lines.append(f"PASS ({len(instantiations)} instantiation{'s' if len(instantiations) != 1 else ''})")
    return Outcome(result=result, verdict="pass", lines=lines)


COMMANDS = {
    "check": cmd_check,
    "normalize": cmd_normalize,
    "canonicity": cmd_canonicity,
    "consistency": cmd_consistency,
    "oracle-eq": cmd_oracle_eq,
    "enumerate": cmd_enumerate,
    "free-theorem": cmd_free_theorem,
}


def _error_payload(err: Exception) -> dict:
    span = getattr(err, "span", None)
    return {
        "kind": getattr(err, "kind", "internal"),
        "span": span.as_dict() if span is not None else None,
        "message": str(err),
    }


def cli_run(argv: Sequence[str], stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)

    args.sources = []
    payload = {"status": "ok", "command": args.command, "result": None, "normal_form": None, "verdict": None, "error": None}
    try:
        out = COMMANDS[args.command](args, stdin)
    except KernelError as err:
        code = err.exit_code
        if getattr(err, "span", None) is None and args.sources:
            err.span = _whole(args.sources[-1])
        payload.update(status="error", error=_error_payload(err))
    except RecursionError as err:
        code = EXIT_INTERNAL
        payload.update(status="error", error={"kind": "internal", "span": None, "message": "recursion limit: " + str(err)})
    except OSError as err:
        code = EXIT_PARSE
        payload.update(status="error", error={"kind": "usage", "span": None, "message": str(err)})
    else:
        code = EXIT_OK if out.holds else EXIT_FALSE
        payload.update(result=out.result, normal_form=out.normal_form, verdict=out.verdict)

    if args.format == "json":
        stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    elif payload["status"] == "ok":
        for line in out.lines:
            stdout.write(line + "\n")
    else:
        stderr.write(f"error: {payload['error']['message']}\n")
    return code


def main() -> None:
    sys.exit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()

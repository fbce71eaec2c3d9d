"""Printers producing text the parsers read back to an alpha-equal term."""

from __future__ import annotations

from typing import Sequence

from tait.mltt import syntax as ms
from tait.stlc import syntax as ss
from tait.systemf import syntax as fs

_BASE = ("x", "y", "z")
_TYPE_BASE = ("X", "Y", "Z")


def fresh(used: Sequence[str], base: Sequence[str] = _BASE) -> str:
    k = 0
    while True:
        name = base[k % len(base)] + ("" if k < len(base) else str(k // len(base)))
        if name not in used:
            return name
        k += 1


def _paren(text: str, wrap: bool) -> str:
    return f"({text})" if wrap else text


# ---------------------------------------------------------------------------
# STLC


def pretty_stlc_type(ty: ss.SimpleType) -> str:
    return str(ty)


def pretty_stlc(t: ss.SimpleTerm, names: Sequence[str] = ()) -> str:
    return _stlc(t, list(names), 0)


def _stlc(t, names, prec) -> str:
    # prec 0: anything; 1: function position; 2: argument position
    match t:
        case ss.Var(i):
            return names[-1 - i] if i < len(names) else f"#{i}"
        case ss.Yes():
            return "yes"
        case ss.No():
            return "no"
        case ss.Star():
            return "()"
        case ss.Pair(a, b):
            return f"({_stlc(a, names, 0)}, {_stlc(b, names, 0)})"
        case ss.Fst(p) | ss.Snd(p):
            word = "fst" if isinstance(t, ss.Fst) else "snd"
            return _paren(f"{word} {_stlc(p, names, 2)}", prec >= 2)
        case ss.Lam(dom, body):
            x = fresh(names)
            return _paren(f"\\{x}:{dom}. {_stlc(body, [*names, x], 0)}", prec >= 1)
        case ss.App(f, a):
            return _paren(f"{_stlc(f, names, 1)} {_stlc(a, names, 2)}", prec >= 2)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# MLTT


def pretty_mltt(t: ms.DTerm, names: Sequence[str] = ()) -> str:
    return _mltt(t, list(names), 0)


def _mltt(t, names, prec) -> str:
    # 0: expr, 1: arrow, 2: prod, 3: application, 4: atom
    match t:
        case ms.Var(i):
            return names[-1 - i] if i < len(names) else f"#{i}"
        case ms.Yes():
            return "yes"
        case ms.No():
            return "no"
        case ms.Ans():
            return "Ans"
        case ms.U():
            return "U"
        case ms.CodeAns():
            return "ans"
        case ms.Pair(a, b):
            return f"({_mltt(a, names, 0)}, {_mltt(b, names, 0)})"
        case ms.Fst(x) | ms.Snd(x) | ms.El(x):
            word = {ms.Fst: "fst", ms.Snd: "snd", ms.El: "El"}[type(t)]
            return _paren(f"{word} {_mltt(x, names, 4)}", prec >= 4)
        case ms.App(f, a):
            return _paren(f"{_mltt(f, names, 3)} {_mltt(a, names, 4)}", prec >= 4)
        case ms.CodePi(a, b) | ms.CodeSigma(a, b):
            word = "pi" if isinstance(t, ms.CodePi) else "sigma"
            x = fresh(names)
            fam = f"(\\{x}. {_mltt(b, [*names, x], 0)})"
            return _paren(f"{word} {_mltt(a, names, 4)} {fam}", prec >= 4)
        case ms.Lam(body):
            x = fresh(names)
            return _paren(f"\\{x}. {_mltt(body, [*names, x], 0)}", prec >= 1)
        case ms.Ann(x, ty):
            return _paren(f"{_mltt(x, names, 1)} : {_mltt(ty, names, 0)}", prec >= 1)
        case ms.Pi(a, b):
            if ms.mentions(b, 0):
                x = fresh(names)
                text = f"({x} : {_mltt(a, names, 0)}) -> {_mltt(b, [*names, x], 1)}"
            else:
                text = f"{_mltt(a, names, 2)} -> {_mltt(b, [*names, '_'], 1)}"
            return _paren(text, prec >= 2)
        case ms.Sigma(a, b):
            if ms.mentions(b, 0):
                x = fresh(names)
                text = f"({x} : {_mltt(a, names, 0)}) * {_mltt(b, [*names, x], 2)}"
            else:
                text = f"{_mltt(a, names, 3)} * {_mltt(b, [*names, '_'], 2)}"
            return _paren(text, prec >= 3)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# System F


def pretty_sysf_type(ty: fs.FType, tnames: Sequence[str] = ()) -> str:
    return _ftype(ty, list(tnames), 0)


def _ftype(ty, tnames, prec) -> str:
    match ty:
        case fs.TVar(i):
            return tnames[-1 - i] if i < len(tnames) else f"#{i}"
        case fs.Arrow(a, b):
            return _paren(f"{_ftype(a, tnames, 1)} -> {_ftype(b, tnames, 0)}", prec >= 1)
        case fs.Forall(body):
            x = fresh(tnames, _TYPE_BASE)
            return _paren(f"forall {x}. {_ftype(body, [*tnames, x], 0)}", prec >= 1)
    raise TypeError(f"not a type: {ty!r}")


def pretty_sysf(t: fs.FTerm, names: Sequence[str] = (), tnames: Sequence[str] = ()) -> str:
    return _fterm(t, list(names), list(tnames), 0)


def _fterm(t, names, tnames, prec) -> str:
    match t:
        case fs.Var(i):
            return names[-1 - i] if i < len(names) else f"#{i}"
        case fs.Lam(ty, body):
            x = fresh(names)
            text = f"\\{x}:{_ftype(ty, tnames, 0)}. {_fterm(body, [*names, x], tnames, 0)}"
            return _paren(text, prec >= 1)
        case fs.TyLam(body):
            x = fresh(tnames, _TYPE_BASE)
            return _paren(f"/\\{x}. {_fterm(body, names, [*tnames, x], 0)}", prec >= 1)
        case fs.App(f, a):
            return _paren(f"{_fterm(f, names, tnames, 1)} {_fterm(a, names, tnames, 2)}", prec >= 2)
        case fs.TyApp(f, ty):
            return _paren(f"{_fterm(f, names, tnames, 1)} [{_ftype(ty, tnames, 0)}]", prec >= 2)
    raise TypeError(f"not a term: {t!r}")

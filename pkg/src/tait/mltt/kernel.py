"""Bidirectional type checking and conversion for the dependent fragment.

Conversion is decided by reifying both sides and comparing normal forms, so
eta for Pi and Sigma holds for free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from tait.errors import InternalInvariantViolation, NotAns, NotClosed, TypingError, UnboundVariable
from tait.mltt import nbe
from tait.mltt import syntax as s
from tait.mltt.nbe import (
    DNf,
    DValue,
    NfNo,
    NfYes,
    NVar,
    VAns,
    VPi,
    VSigma,
    VU,
    reflect,
    reify,
    reify_ty,
)
from tait.mltt.syntax import DTerm
from tait.stlc.nbe import Verdict


def _show(nf: DNf, depth: int) -> str:
    try:
        from tait.frontend.pretty import pretty_mltt

        return pretty_mltt(nbe.embed_nf(nf, depth), [f"#{i}" for i in range(depth)])
    except Exception:
        return repr(nf)


class ExpectedPi(TypingError):
    def __init__(self, actual: DNf, depth: int):
        super().__init__(f"expected a function type, got {_show(actual, depth)}")
        self.actual = actual


class ExpectedSigma(TypingError):
    def __init__(self, actual: DNf, depth: int):
        super().__init__(f"expected a pair type, got {_show(actual, depth)}")
        self.actual = actual


class ExpectedU(TypingError):
    def __init__(self, actual: DNf, depth: int):
        super().__init__(f"expected a code in U, got something of type {_show(actual, depth)}")
        self.actual = actual


class ConversionFailure(TypingError):
    def __init__(self, expected: DNf, actual: DNf, depth: int):
        super().__init__(f"type mismatch: expected {_show(expected, depth)}, got {_show(actual, depth)}")
        self.expected = expected
        self.actual = actual


class NotAType(TypingError):
    def __init__(self, term: DTerm):
        super().__init__("expected a type (Ans, U, El, a Pi or a Sigma type)")
        self.term = term


class CannotInfer(TypingError):
    def __init__(self, term: DTerm):
        kind = type(term).__name__
        super().__init__(f"cannot infer a type for {kind}; add a type ascription")
        self.term = term


@dataclass(frozen=True)
class Ctx:
    """A typing context: the type of each variable, and the value it stands for.

    The values are reflected fresh variables, so evaluating in ``env`` computes
    open normal forms.
    """

    types: tuple = ()
    env: tuple = ()
    names: tuple = field(default=(), compare=False)

    def __len__(self):
        return len(self.types)

    def extend(self, ty: DValue, name: str | None = None) -> Ctx:
        d = len(self.types)
        x = reflect(ty, NVar(d), d + 1)
        return Ctx((*self.types, ty), (*self.env, x), (*self.names, name or f"x{d}"))

    def eval(self, t: DTerm) -> DValue:
        return nbe.eval(self.env, t, len(self))

    def lookup(self, index: int) -> DValue:
        if not 0 <= index < len(self.types):
            raise UnboundVariable(index)
        return self.types[-1 - index]


EMPTY = Ctx()


def context(entries: Sequence[DTerm | tuple[str, DTerm]]) -> Ctx:
    """Build a context from types given as terms, each checked in its prefix."""
    ctx = EMPTY
    for entry in entries:
        name, ty = entry if isinstance(entry, tuple) else (None, entry)
        check_type(ctx, ty)
        ctx = ctx.extend(ctx.eval(ty), name)
    return ctx


def check_type(ctx: Ctx, t: DTerm) -> None:
    match t:
        case s.Ans() | s.U():
            return
        case s.El(code):
            check(ctx, code, VU())
        case s.Pi(a, b) | s.Sigma(a, b):
            check_type(ctx, a)
            check_type(ctx.extend(ctx.eval(a)), b)
        case _:
            raise NotAType(t)


def check(ctx: Ctx, t: DTerm, ty: DValue) -> None:
    d = len(ctx)
    match t:
        case s.Lam(body):
            if not isinstance(ty, VPi):
                raise ExpectedPi(reify_ty(ty, d), d)
            inner = ctx.extend(ty.domain)
            check(inner, body, ty.codomain(inner.env[-1], d + 1))
            return
        case s.Pair(a, b):
            if not isinstance(ty, VSigma):
                raise ExpectedSigma(reify_ty(ty, d), d)
            check(ctx, a, ty.domain)
            check(ctx, b, ty.codomain(ctx.eval(a), d))
            return
    actual = infer(ctx, t)
    if not convert_ty(ctx, ty, actual):
        if isinstance(ty, VU):
            raise ExpectedU(reify_ty(actual, d), d)
        raise ConversionFailure(reify_ty(ty, d), reify_ty(actual, d), d)


def infer(ctx: Ctx, t: DTerm) -> DValue:
    d = len(ctx)
    match t:
        case s.Var(i):
            return ctx.lookup(i)
        case s.Yes() | s.No():
            return VAns()
        case s.CodeAns():
            return VU()
        case s.CodePi(a, b) | s.CodeSigma(a, b):
            check(ctx, a, VU())
            inner = ctx.extend(nbe.el(ctx.eval(a)))
            check(inner, b, VU())
            return VU()
        case s.App(f, a):
            fty = infer(ctx, f)
            if not isinstance(fty, VPi):
                raise ExpectedPi(reify_ty(fty, d), d)
            check(ctx, a, fty.domain)
            return fty.codomain(ctx.eval(a), d)
        case s.Fst(p) | s.Snd(p):
            pty = infer(ctx, p)
            if not isinstance(pty, VSigma):
                raise ExpectedSigma(reify_ty(pty, d), d)
            if isinstance(t, s.Fst):
                return pty.domain
            return pty.codomain(nbe.fst(ctx.eval(p)), d)
        case s.Ann(x, ty):
            check_type(ctx, ty)
            tyv = ctx.eval(ty)
            check(ctx, x, tyv)
            return tyv
        case s.Ans() | s.U() | s.El() | s.Pi() | s.Sigma():
            raise CannotInfer(t)
        case s.Lam() | s.Pair():
            raise CannotInfer(t)
    raise InternalInvariantViolation(f"not a term: {t!r}")


def convert(ctx: Ctx, ty: DValue, v1: DValue, v2: DValue) -> bool:
    d = len(ctx)
    return reify(ty, v1, d) == reify(ty, v2, d)


def convert_ty(ctx: Ctx, t1: DValue, t2: DValue) -> bool:
    d = len(ctx)
    return reify_ty(t1, d) == reify_ty(t2, d)


def d_normalize(ctx: Ctx, t: DTerm, ty: DTerm) -> DNf:
    check_type(ctx, ty)
    tyv = ctx.eval(ty)
    check(ctx, t, tyv)
    return reify(tyv, ctx.eval(t), len(ctx))


def d_normalize_ty(ctx: Ctx, ty: DTerm) -> DNf:
    check_type(ctx, ty)
    return reify_ty(ctx.eval(ty), len(ctx))


def d_canonicity(t: DTerm) -> Verdict:
    if s.scope(t) > 0:
        raise NotClosed()
    try:
        check(EMPTY, t, VAns())
    except ConversionFailure as e:
        raise NotAns(e.actual) from e
    match reify(VAns(), EMPTY.eval(t), 0):
        case NfYes():
            return Verdict.IS_YES
        case NfNo():
            return Verdict.IS_NO
        case other:
            raise InternalInvariantViolation(f"closed normal form of type Ans is {other!r}")

"""System F: types, terms, typing and beta normalization.

Type variables and term variables use separate de Bruijn index spaces. A
``TyLam`` binds a type variable only; a ``Lam`` binds a term variable only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from tait.errors import ArgumentMismatch, FuelExhausted, NotAFunction, TypingError, UnboundVariable

DEFAULT_FUEL = 10_000

# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class TVar:
    index: int


@dataclass(frozen=True)
class Arrow:
    domain: FType
    codomain: FType


@dataclass(frozen=True)
class Forall:
    body: FType


FType = Union[TVar, Arrow, Forall]


def type_scope(ty: FType) -> int:
    match ty:
        case TVar(i):
            return i + 1
        case Arrow(a, b):
            return max(type_scope(a), type_scope(b))
        case Forall(body):
            return max(type_scope(body) - 1, 0)
    raise TypeError(f"not a type: {ty!r}")


def tshift(ty: FType, by: int, cutoff: int = 0) -> FType:
    match ty:
        case TVar(i):
            return TVar(i + by) if i >= cutoff else ty
        case Arrow(a, b):
            return Arrow(tshift(a, by, cutoff), tshift(b, by, cutoff))
        case Forall(body):
            return Forall(tshift(body, by, cutoff + 1))
    raise TypeError(f"not a type: {ty!r}")


def tsubst(ty: FType, index: int, rep: FType) -> FType:
    """Replace ``TVar(index)`` by ``rep``; ``rep`` lives in the same scope as ``ty``."""
    match ty:
        case TVar(i):
            return rep if i == index else ty
        case Arrow(a, b):
            return Arrow(tsubst(a, index, rep), tsubst(b, index, rep))
        case Forall(body):
            return Forall(tsubst(body, index + 1, tshift(rep, 1)))
    raise TypeError(f"not a type: {ty!r}")


def tinstantiate(body: FType, arg: FType) -> FType:
    """``body[X := arg]`` for the type variable bound by an enclosing ``Forall``."""
    return tshift(tsubst(body, 0, tshift(arg, 1)), -1)


def close_type(ty: FType, types: Sequence[FType]) -> FType:
    """Substitute closed ``types`` (innermost last) for the free type variables."""
    for i, rep in enumerate(reversed(types)):
        ty = tsubst(ty, i, tshift(rep, len(types)))
    return tshift(ty, -len(types))


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Lam:
    annotation: FType
    body: FTerm


@dataclass(frozen=True)
class App:
    fn: FTerm
    arg: FTerm


@dataclass(frozen=True)
class TyLam:
    body: FTerm


@dataclass(frozen=True)
class TyApp:
    fn: FTerm
    type: FType


FTerm = Union[Var, Lam, App, TyLam, TyApp]


def size(t: FTerm) -> int:
    """Term constructor count; types inside annotations and type applications are free."""
    match t:
        case Lam(_, b) | TyLam(b) | TyApp(b, _):
            return 1 + size(b)
        case App(f, a):
            return 1 + size(f) + size(a)
        case _:
            return 1


def term_tshift(t: FTerm, by: int, cutoff: int = 0) -> FTerm:
    match t:
        case Var():
            return t
        case Lam(ty, b):
            return Lam(tshift(ty, by, cutoff), term_tshift(b, by, cutoff))
        case App(f, a):
            return App(term_tshift(f, by, cutoff), term_tshift(a, by, cutoff))
        case TyLam(b):
            return TyLam(term_tshift(b, by, cutoff + 1))
        case TyApp(f, ty):
            return TyApp(term_tshift(f, by, cutoff), tshift(ty, by, cutoff))
    raise TypeError(f"not a term: {t!r}")


def term_tsubst(t: FTerm, index: int, rep: FType) -> FTerm:
    match t:
        case Var():
            return t
        case Lam(ty, b):
            return Lam(tsubst(ty, index, rep), term_tsubst(b, index, rep))
        case App(f, a):
            return App(term_tsubst(f, index, rep), term_tsubst(a, index, rep))
        case TyLam(b):
            return TyLam(term_tsubst(b, index + 1, tshift(rep, 1)))
        case TyApp(f, ty):
            return TyApp(term_tsubst(f, index, rep), tsubst(ty, index, rep))
    raise TypeError(f"not a term: {t!r}")


def shift(t: FTerm, by: int, cutoff: int = 0) -> FTerm:
    match t:
        case Var(i):
            return Var(i + by) if i >= cutoff else t
        case Lam(ty, b):
            return Lam(ty, shift(b, by, cutoff + 1))
        case App(f, a):
            return App(shift(f, by, cutoff), shift(a, by, cutoff))
        case TyLam(b):
            return TyLam(shift(b, by, cutoff))
        case TyApp(f, ty):
            return TyApp(shift(f, by, cutoff), ty)
    raise TypeError(f"not a term: {t!r}")


def subst(t: FTerm, index: int, rep: FTerm) -> FTerm:
    match t:
        case Var(i):
            return rep if i == index else t
        case Lam(ty, b):
            return Lam(ty, subst(b, index + 1, shift(rep, 1)))
        case App(f, a):
            return App(subst(f, index, rep), subst(a, index, rep))
        case TyLam(b):
            return TyLam(subst(b, index, term_tshift(rep, 1)))
        case TyApp(f, ty):
            return TyApp(subst(f, index, rep), ty)
    raise TypeError(f"not a term: {t!r}")


def instantiate(body: FTerm, arg: FTerm) -> FTerm:
    return shift(subst(body, 0, shift(arg, 1)), -1)


def type_instantiate(body: FTerm, arg: FType) -> FTerm:
    return term_tshift(term_tsubst(body, 0, tshift(arg, 1)), -1)


def term_scope(t: FTerm) -> int:
    match t:
        case Var(i):
            return i + 1
        case Lam(_, b):
            return max(term_scope(b) - 1, 0)
        case App(f, a):
            return max(term_scope(f), term_scope(a))
        case TyLam(b) | TyApp(b, _):
            return term_scope(b)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Typing


class NotAForall(TypingError):
    def __init__(self, actual: FType):
        super().__init__(f"expected a polymorphic type, got {actual!r}")
        self.actual = actual


def _check_scoped(tctx: int, ty: FType) -> None:
    if type_scope(ty) > tctx:
        raise UnboundVariable(type_scope(ty) - 1, "type")


def f_infer(tctx: int, ctx: Sequence[FType], t: FTerm) -> FType:
    """Type of ``t`` with ``tctx`` type variables and term variables typed by ``ctx``."""
    ctx = tuple(ctx)
    match t:
        case Var(i):
            if not 0 <= i < len(ctx):
                raise UnboundVariable(i)
            return ctx[-1 - i]
        case Lam(ty, b):
            _check_scoped(tctx, ty)
            return Arrow(ty, f_infer(tctx, (*ctx, ty), b))
        case App(f, a):
            fty = f_infer(tctx, ctx, f)
            if not isinstance(fty, Arrow):
                raise NotAFunction(fty)
            aty = f_infer(tctx, ctx, a)
            if aty != fty.domain:
                raise ArgumentMismatch(fty.domain, aty)
            return fty.codomain
        case TyLam(b):
            return Forall(f_infer(tctx + 1, tuple(tshift(ty, 1) for ty in ctx), b))
        case TyApp(f, ty):
            _check_scoped(tctx, ty)
            fty = f_infer(tctx, ctx, f)
            if not isinstance(fty, Forall):
                raise NotAForall(fty)
            return tinstantiate(fty.body, ty)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Reduction


def _contract(t: FTerm) -> FTerm | None:
    match t:
        case App(Lam(_, b), a):
            return instantiate(b, a)
        case TyApp(TyLam(b), ty):
            return type_instantiate(b, ty)
    return None


def f_step(t: FTerm) -> FTerm | None:
    """One leftmost-outermost beta step, or ``None`` if ``t`` is normal."""
    r = _contract(t)
    if r is not None:
        return r
    match t:
        case App(f, a):
            r = f_step(f)
            if r is not None:
                return App(r, a)
            r = f_step(a)
            if r is not None:
                return App(f, r)
        case Lam(ty, b):
            r = f_step(b)
            if r is not None:
                return Lam(ty, r)
        case TyLam(b):
            r = f_step(b)
            if r is not None:
                return TyLam(r)
        case TyApp(f, ty):
            r = f_step(f)
            if r is not None:
                return TyApp(r, ty)
    return None


def f_normalize(t: FTerm, fuel: int = DEFAULT_FUEL) -> FTerm:
    steps = 0
    while True:
        r = f_step(t)
        if r is None:
            return t
        if steps == fuel:
            raise FuelExhausted(steps)
        t = r
        steps += 1


def is_normal(t: FTerm) -> bool:
    return f_step(t) is None

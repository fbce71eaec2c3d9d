"""Exhaustive enumeration of beta-normal, eta-long System F terms."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from tait.systemf.syntax import App, Arrow, Forall, FTerm, FType, Lam, TVar, TyApp, TyLam, Var, tinstantiate, tshift


def long_normal_inhabitants(
    ty: FType,
    max_size: int,
    tctx: int = 0,
    ctx: Sequence[FType] = (),
    type_args: Sequence[FType] = (),
) -> list[FTerm]:
    """All beta-normal eta-long terms of ``ty`` with at most ``max_size`` nodes.

    Polymorphic variables in head position are instantiated with the type
    variables in scope plus ``type_args`` (closed types), which keeps the
    search finite.
    """
    out: list[FTerm] = []
    for n in range(1, max_size + 1):
        out.extend(_of_size(tctx, tuple(ctx), ty, n, tuple(type_args)))
    return out


@lru_cache(maxsize=None)
def _of_size(tctx: int, ctx: tuple, ty: FType, n: int, type_args: tuple) -> tuple[FTerm, ...]:
    if n < 1:
        return ()
    match ty:
        case Forall(body):
            inner = tuple(tshift(c, 1) for c in ctx)
            return tuple(TyLam(b) for b in _of_size(tctx + 1, inner, body, n - 1, type_args))
        case Arrow(dom, cod):
            return tuple(Lam(dom, b) for b in _of_size(tctx, (*ctx, dom), cod, n - 1, type_args))
    found = []
    for i in range(len(ctx)):
        found.extend(_spines(tctx, ctx, Var(i), ctx[-1 - i], ty, n - 1, type_args))
    return tuple(dict.fromkeys(found))


def _spines(tctx, ctx, head, head_ty, target, budget, type_args) -> Iterator[FTerm]:
    if budget == 0:
        if head_ty == target:
            yield head
        return
    match head_ty:
        case Arrow(dom, cod):
            for k in range(1, budget):
                for a in _of_size(tctx, ctx, dom, k, type_args):
                    yield from _spines(tctx, ctx, App(head, a), cod, target, budget - 1 - k, type_args)
        case Forall(body):
            for arg in (*(TVar(i) for i in range(tctx)), *(tshift(t, tctx) for t in type_args)):
                yield from _spines(tctx, ctx, TyApp(head, arg), tinstantiate(body, arg), target, budget - 1, type_args)

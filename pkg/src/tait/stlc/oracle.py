"""Rewriting-based equality, kept independent of the NbE code path.

Judgemental equality is decided here by leftmost-outermost beta reduction to a
beta-normal form, followed by type-directed eta expansion. The enumerator at
the bottom generates every well-typed term up to a size bound and is what the
property tests sweep over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

from tait.errors import FuelExhausted, TypeMismatch
from tait.stlc.syntax import (
    ANS,
    NO,
    STAR,
    UNIT,
    YES,
    Ans,
    App,
    Context,
    Fst,
    Fun,
    Lam,
    Pair,
    Prod,
    SimpleTerm,
    SimpleType,
    Snd,
    Unit,
    Var,
    infer,
    instantiate,
    subtypes,
    weaken,
)

DEFAULT_FUEL = 10_000


@dataclass(frozen=True)
class Stepped:
    term: SimpleTerm


@dataclass(frozen=True)
class Stuck:
    pass


RewriteResult = Union[Stepped, Stuck]
STUCK = Stuck()


def _contract(t: SimpleTerm) -> SimpleTerm | None:
    match t:
        case App(Lam(_, body), arg):
            return instantiate(body, arg)
        case Fst(Pair(a, _)):
            return a
        case Snd(Pair(_, b)):
            return b
    return None


def step(t: SimpleTerm) -> RewriteResult:
    """Contract the leftmost-outermost beta redex, if any."""
    reduct = _contract(t)
    if reduct is not None:
        return Stepped(reduct)
    match t:
        case App(f, a):
            r = step(f)
            if isinstance(r, Stepped):
                return Stepped(App(r.term, a))
            r = step(a)
            if isinstance(r, Stepped):
                return Stepped(App(f, r.term))
        case Pair(a, b):
            r = step(a)
            if isinstance(r, Stepped):
                return Stepped(Pair(r.term, b))
            r = step(b)
            if isinstance(r, Stepped):
                return Stepped(Pair(a, r.term))
        case Fst(p) | Snd(p):
            r = step(p)
            if isinstance(r, Stepped):
                return Stepped(type(t)(r.term))
        case Lam(dom, body):
            r = step(body)
            if isinstance(r, Stepped):
                return Stepped(Lam(dom, r.term))
    return STUCK


def bounded_beta_normalize(t: SimpleTerm, fuel: int = DEFAULT_FUEL) -> SimpleTerm:
    steps = 0
    while True:
        r = step(t)
        if isinstance(r, Stuck):
            return t
        if steps == fuel:
            raise FuelExhausted(steps)
        t = r.term
        steps += 1


def eta_expand(ctx: Context, ty: SimpleType, t: SimpleTerm) -> SimpleTerm:
    """Eta-long form of a beta-normal term ``t`` of type ``ty``."""
    match ty:
        case Unit():
            return STAR
        case Fun(dom, cod):
            inner = (*ctx, dom)
            if isinstance(t, Lam):
                return Lam(dom, eta_expand(inner, cod, t.body))
            x = eta_expand(inner, dom, Var(0))
            return Lam(dom, eta_expand(inner, cod, App(weaken(t, len(ctx)), x)))
        case Prod(a, b):
            if isinstance(t, Pair):
                return Pair(eta_expand(ctx, a, t.fst), eta_expand(ctx, b, t.snd))
            return Pair(eta_expand(ctx, a, Fst(t)), eta_expand(ctx, b, Snd(t)))
        case Ans():
            if t == YES or t == NO:
                return t
            return _expand_spine(ctx, t)[0]
    raise TypeError(f"not a type: {ty!r}")


def _expand_spine(ctx: Context, t: SimpleTerm) -> tuple[SimpleTerm, SimpleType]:
    # t is neutral: a variable under eliminators. Expand the arguments only.
    match t:
        case Var(i):
            return t, ctx[-1 - i]
        case App(f, a):
            f2, fty = _expand_spine(ctx, f)
            return App(f2, eta_expand(ctx, fty.domain, a)), fty.codomain
        case Fst(p):
            p2, pty = _expand_spine(ctx, p)
            return Fst(p2), pty.left
        case Snd(p):
            p2, pty = _expand_spine(ctx, p)
            return Snd(p2), pty.right
    raise ValueError(f"expected a beta-normal neutral term, got {t!r}")


def long_normal_form(ctx: Context, t: SimpleTerm, fuel: int = DEFAULT_FUEL) -> SimpleTerm:
    ty = infer(ctx, t)
    return eta_expand(ctx, ty, bounded_beta_normalize(t, fuel))


def oracle_equal(ctx: Context, t: SimpleTerm, s: SimpleTerm, fuel: int = DEFAULT_FUEL) -> bool:
    tty, sty = infer(ctx, t), infer(ctx, s)
    if tty != sty:
        raise TypeMismatch(tty, sty)
    return long_normal_form(ctx, t, fuel) == long_normal_form(ctx, s, fuel)


# ---------------------------------------------------------------------------
# Enumeration


def default_palette(ctx: Context, ty: SimpleType) -> tuple[SimpleType, ...]:
    out: list[SimpleType] = [ANS, UNIT]
    for root in (*ctx, ty):
        for sub in subtypes(root):
            if sub not in out:
                out.append(sub)
    return tuple(out)


def enumerate_terms(
    ctx: Context,
    ty: SimpleType,
    max_size: int,
    palette: Iterable[SimpleType] | None = None,
) -> list[SimpleTerm]:
    """Every well-typed term of ``ty`` in ``ctx`` with at most ``max_size`` nodes.

    Eliminators range over the palette for their hidden type: the argument
    type of an application and the other component of a projected pair. The
    palette defaults to the base types plus every subtype of ``ctx`` and ``ty``.
    Terms come out grouped by size, smallest first.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    pal = tuple(palette) if palette is not None else default_palette(tuple(ctx), ty)
    out: list[SimpleTerm] = []
    for n in range(1, max_size + 1):
        out.extend(terms_of_size(tuple(ctx), ty, n, pal))
    return out


@lru_cache(maxsize=None)
def terms_of_size(ctx: Context, ty: SimpleType, n: int, palette: tuple[SimpleType, ...]) -> tuple[SimpleTerm, ...]:
    seen: dict[SimpleTerm, None] = {}
    for t in _generate(ctx, ty, n, palette):
        seen.setdefault(t, None)
    return tuple(seen)


def _generate(ctx, ty, n, palette) -> Iterator[SimpleTerm]:
    if n == 1:
        for i in range(len(ctx)):
            if ctx[-1 - i] == ty:
                yield Var(i)
        match ty:
            case Ans():
                yield YES
                yield NO
            case Unit():
                yield STAR
        return
    # introductions
    match ty:
        case Prod(a, b):
            for k in range(1, n - 1):
                for x in terms_of_size(ctx, a, k, palette):
                    for y in terms_of_size(ctx, b, n - 1 - k, palette):
                        yield Pair(x, y)
        case Fun(dom, cod):
            for body in terms_of_size((*ctx, dom), cod, n - 1, palette):
                yield Lam(dom, body)
    # eliminations
    for other in palette:
        for p in terms_of_size(ctx, Prod(ty, other), n - 1, palette):
            yield Fst(p)
    for other in palette:
        for p in terms_of_size(ctx, Prod(other, ty), n - 1, palette):
            yield Snd(p)
    for dom in palette:
        for k in range(1, n - 1):
            for f in terms_of_size(ctx, Fun(dom, ty), k, palette):
                for a in terms_of_size(ctx, dom, n - 1 - k, palette):
                    yield App(f, a)

"""Finite-set semantics for the simply typed calculus.

Ans is a two-element set, Unit a singleton, products are Cartesian products
and function types are the full set of function tables. Because everything is
finite, equality of denotations is decidable, which is what makes the
equational-consistency argument executable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

from tait.errors import InternalInvariantViolation, SizeOverflow
from tait.stlc.syntax import (
    Ans,
    App,
    Context,
    Fst,
    Fun,
    Lam,
    No,
    Pair,
    Prod,
    SimpleTerm,
    SimpleType,
    Snd,
    Star,
    Unit,
    Var,
    Yes,
)

DEFAULT_BOUND = 65_536


@dataclass(frozen=True)
class Atom:
    tag: str

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class Tuple:
    left: Element
    right: Element

    def __str__(self):
        return f"({self.left}, {self.right})"


@dataclass(frozen=True)
class Table:
    """A total function, stored as its graph in the domain's enumeration order."""

    graph: tuple[tuple[Element, Element], ...]
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.graph))

    def __call__(self, x: Element) -> Element:
        try:
            return self._lookup[x]
        except KeyError:
            raise InternalInvariantViolation(f"{x} is outside the domain of {self}") from None

    def __str__(self):
        return "{" + ", ".join(f"{k}↦{v}" for k, v in self.graph) + "}"


Element = Union[Atom, Tuple, Table]
FinSet = tuple  # tuple[Element, ...], no duplicates

TRUE = Atom("t")
FALSE = Atom("f")
NIL = Atom("nil")


def cardinality(ty: SimpleType) -> int:
    match ty:
        case Ans():
            return 2
        case Unit():
            return 1
        case Prod(a, b):
            return cardinality(a) * cardinality(b)
        case Fun(a, b):
            return cardinality(b) ** cardinality(a)
    raise TypeError(f"not a type: {ty!r}")


def interp_ty(ty: SimpleType, bound: int = DEFAULT_BOUND) -> FinSet:
    n = cardinality(ty)
    if n > bound:
        raise SizeOverflow(n, bound)
    return _interp_ty(ty)


@lru_cache(maxsize=None)
def _interp_ty(ty: SimpleType) -> FinSet:
    match ty:
        case Ans():
            return (TRUE, FALSE)
        case Unit():
            return (NIL,)
        case Prod(a, b):
            return tuple(Tuple(x, y) for x in _interp_ty(a) for y in _interp_ty(b))
        case Fun(a, b):
            dom = _interp_ty(a)
            return tuple(Table(tuple(zip(dom, outs))) for outs in itertools.product(_interp_ty(b), repeat=len(dom)))
    raise TypeError(f"not a type: {ty!r}")


def interp_tm(ctx: Context, env: Sequence[Element], t: SimpleTerm, bound: int = DEFAULT_BOUND) -> Element:
    """Denotation of ``t`` under ``env`` (innermost binding last, like ``ctx``)."""
    if len(env) != len(ctx):
        raise InternalInvariantViolation("environment and context lengths differ")
    return _interp(tuple(ctx), tuple(env), t, bound)


def _interp(ctx, env, t, bound) -> Element:
    match t:
        case Var(i):
            return env[-1 - i]
        case Yes():
            return TRUE
        case No():
            return FALSE
        case Star():
            return NIL
        case Pair(a, b):
            return Tuple(_interp(ctx, env, a, bound), _interp(ctx, env, b, bound))
        case Fst(p) | Snd(p):
            v = _interp(ctx, env, p, bound)
            if not isinstance(v, Tuple):
                raise InternalInvariantViolation(f"projection out of {v}")
            return v.left if isinstance(t, Fst) else v.right
        case Lam(dom, body):
            inner = (*ctx, dom)
            return Table(tuple((x, _interp(inner, (*env, x), body, bound)) for x in interp_ty(dom, bound)))
        case App(f, a):
            fv = _interp(ctx, env, f, bound)
            if not isinstance(fv, Table):
                raise InternalInvariantViolation(f"application of {fv}")
            return fv(_interp(ctx, env, a, bound))
    raise InternalInvariantViolation(f"not a term: {t!r}")


def environments(ctx: Context, bound: int = DEFAULT_BOUND):
    """Every environment for ``ctx``, in lexicographic order."""
    return itertools.product(*(interp_ty(ty, bound) for ty in ctx))


def consistency_check() -> bool:
    """``yes`` and ``no`` have different denotations, so they cannot be equal."""
    return interp_tm((), (), Yes()) != interp_tm((), (), No())

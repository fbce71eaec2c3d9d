"""Normalization by evaluation for the simply typed calculus.

Neutral variables are de Bruijn *levels*, so a value built in a small context
stays valid in every extension of it and no renaming of values is needed.
The price is that anything that reifies (quoting under a binder, applying a
neutral function) must know the current context length, passed around as
``depth``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from tait.errors import InternalInvariantViolation, LevelOutOfRange, NotAns, NotClosed
from tait.stlc.syntax import (
    ANS,
    NO,
    STAR,
    YES,
    Ans,
    App,
    Context,
    Fst,
    Fun,
    Lam,
    No,
    Pair,
    Prod,
    Renaming,
    SimpleTerm,
    SimpleType,
    Snd,
    Star,
    Unit,
    Var,
    Yes,
    infer,
    scope,
)

# ---------------------------------------------------------------------------
# Neutral and normal forms


@dataclass(frozen=True)
class NVar:
    level: int


@dataclass(frozen=True)
class NFst:
    neutral: NeutralForm


@dataclass(frozen=True)
class NSnd:
    neutral: NeutralForm


@dataclass(frozen=True)
class NApp:
    neutral: NeutralForm
    arg: NormalForm


NeutralForm = Union[NVar, NFst, NSnd, NApp]


@dataclass(frozen=True)
class NfYes:
    pass


@dataclass(frozen=True)
class NfNo:
    pass


@dataclass(frozen=True)
class NfNeutAns:
    neutral: NeutralForm


@dataclass(frozen=True)
class NfStar:
    pass


@dataclass(frozen=True)
class NfPair:
    fst: NormalForm
    snd: NormalForm


@dataclass(frozen=True)
class NfLam:
    annotation: SimpleType
    body: NormalForm


NormalForm = Union[NfYes, NfNo, NfNeutAns, NfStar, NfPair, NfLam]

# ---------------------------------------------------------------------------
# Values


@dataclass(frozen=True)
class VYes:
    pass


@dataclass(frozen=True)
class VNo:
    pass


@dataclass(frozen=True)
class VStar:
    pass


@dataclass(frozen=True)
class VPair:
    fst: Value
    snd: Value


@dataclass(frozen=True)
class VClosure:
    env: Environment
    annotation: SimpleType
    body: SimpleTerm


@dataclass(frozen=True)
class VNeutral:
    type: SimpleType
    spine: NeutralForm


Value = Union[VYes, VNo, VStar, VPair, VClosure, VNeutral]
Environment = tuple  # tuple[Value, ...], innermost last, parallel to a Context


class Verdict(Enum):
    IS_YES = "yes"
    IS_NO = "no"


# ---------------------------------------------------------------------------
# Evaluation


def eval(env: Environment, t: SimpleTerm, depth: int | None = None) -> Value:
    """Interpret ``t`` in ``env``.

    ``depth`` is the length of the context the result will be read back in;
    it defaults to ``len(env)``.
    """
    if depth is None:
        depth = len(env)
    match t:
        case Var(i):
            if not 0 <= i < len(env):
                raise InternalInvariantViolation(f"variable {i} outside an environment of length {len(env)}")
            return env[-1 - i]
        case Yes():
            return VYes()
        case No():
            return VNo()
        case Star():
            return VStar()
        case Pair(a, b):
            return VPair(eval(env, a, depth), eval(env, b, depth))
        case Fst(p):
            return _fst(eval(env, p, depth))
        case Snd(p):
            return _snd(eval(env, p, depth))
        case Lam(dom, body):
            return VClosure(env, dom, body)
        case App(f, a):
            return apply(eval(env, f, depth), eval(env, a, depth), depth)
    raise InternalInvariantViolation(f"not a term: {t!r}")


def _fst(v: Value) -> Value:
    if isinstance(v, VPair):
        return v.fst
    raise InternalInvariantViolation(f"first projection of {v!r}")


def _snd(v: Value) -> Value:
    if isinstance(v, VPair):
        return v.snd
    raise InternalInvariantViolation(f"second projection of {v!r}")


def apply(f: Value, a: Value, depth: int | None = None) -> Value:
    if depth is None:
        depth = max(_min_depth(f), _min_depth(a))
    match f:
        case VClosure(env, _, body):
            return eval((*env, a), body, depth)
        case VNeutral(Fun(dom, cod), spine):
            return reflect(cod, NApp(spine, reify(dom, a, depth)))
    raise InternalInvariantViolation(f"cannot apply {f!r}")


def _min_depth(v) -> int:
    """One more than the largest level mentioned anywhere in ``v``."""
    match v:
        case NVar(level):
            return level + 1
        case VPair(a, b) | NApp(a, b) | NfPair(a, b):
            return max(_min_depth(a), _min_depth(b))
        case NFst(n) | NSnd(n) | NfNeutAns(n) | VNeutral(_, n):
            return _min_depth(n)
        case VClosure(env, _, _):
            return max((_min_depth(e) for e in env), default=0)
        case NfLam(_, body):
            return _min_depth(body)
        case _:
            return 0


def reflect(ty: SimpleType, n: NeutralForm) -> Value:
    match ty:
        case Ans():
            return VNeutral(ty, n)
        case Unit():
            return VStar()
        case Prod(a, b):
            return VPair(reflect(a, NFst(n)), reflect(b, NSnd(n)))
        case Fun():
            return VNeutral(ty, n)
    raise InternalInvariantViolation(f"not a type: {ty!r}")


def reify(ty: SimpleType, v: Value, fresh_level: int) -> NormalForm:
    match ty, v:
        case Unit(), _:
            return NfStar()
        case Ans(), VYes():
            return NfYes()
        case Ans(), VNo():
            return NfNo()
        case Ans(), VNeutral(_, n):
            return NfNeutAns(n)
        case Prod(a, b), VPair(x, y):
            return NfPair(reify(a, x, fresh_level), reify(b, y, fresh_level))
        case Fun(dom, cod), _:
            x = reflect(dom, NVar(fresh_level))
            body = apply(v, x, fresh_level + 1)
            return NfLam(dom, reify(cod, body, fresh_level + 1))
    raise InternalInvariantViolation(f"cannot reify {v!r} at {ty}")


def reflect_context(ctx: Context) -> Environment:
    return tuple(reflect(ty, NVar(level)) for level, ty in enumerate(ctx))


def normalize(ctx: Context, t: SimpleTerm) -> NormalForm:
    ty = infer(ctx, t)
    return reify(ty, eval(reflect_context(ctx), t), len(ctx))


def canonicity(t: SimpleTerm) -> Verdict:
    """Decide which constructor a closed term of type Ans is equal to."""
    if scope(t) > 0:
        raise NotClosed()
    ty = infer((), t)
    if ty != ANS:
        raise NotAns(ty)
    match normalize((), t):
        case NfYes():
            return Verdict.IS_YES
        case NfNo():
            return Verdict.IS_NO
        case other:
            raise InternalInvariantViolation(f"closed normal form of type Ans is {other!r}")


# ---------------------------------------------------------------------------
# Back to syntax


def embed_ne(n: NeutralForm, depth: int) -> SimpleTerm:
    match n:
        case NVar(level):
            if not 0 <= level < depth:
                raise LevelOutOfRange(level, depth)
            return Var(depth - 1 - level)
        case NFst(p):
            return Fst(embed_ne(p, depth))
        case NSnd(p):
            return Snd(embed_ne(p, depth))
        case NApp(f, a):
            return App(embed_ne(f, depth), embed_nf(a, depth))
    raise InternalInvariantViolation(f"not a neutral form: {n!r}")


def embed_nf(n: NormalForm, depth: int = 0) -> SimpleTerm:
    match n:
        case NfYes():
            return YES
        case NfNo():
            return NO
        case NfStar():
            return STAR
        case NfNeutAns(ne):
            return embed_ne(ne, depth)
        case NfPair(a, b):
            return Pair(embed_nf(a, depth), embed_nf(b, depth))
        case NfLam(dom, body):
            return Lam(dom, embed_nf(body, depth + 1))
    raise InternalInvariantViolation(f"not a normal form: {n!r}")


def rename_nf(n: NormalForm, r: Renaming) -> NormalForm:
    """Transport a normal form along ``r`` (source context -> target context).

    Levels below the source length are free and get renamed; higher levels are
    bound inside ``n`` and only shift with the change in context length.
    """
    src, tgt = r.source_length, r.target_length

    def level(lv: int) -> int:
        if lv >= src:
            return lv - src + tgt
        return tgt - 1 - r(src - 1 - lv)

    def ne(m: NeutralForm) -> NeutralForm:
        match m:
            case NVar(lv):
                return NVar(level(lv))
            case NFst(p):
                return NFst(ne(p))
            case NSnd(p):
                return NSnd(ne(p))
            case NApp(f, a):
                return NApp(ne(f), nf(a))
        raise InternalInvariantViolation(f"not a neutral form: {m!r}")

    def nf(m: NormalForm) -> NormalForm:
        match m:
            case NfNeutAns(x):
                return NfNeutAns(ne(x))
            case NfPair(a, b):
                return NfPair(nf(a), nf(b))
            case NfLam(dom, body):
                return NfLam(dom, nf(body))
            case _:
                return m

    return nf(n)

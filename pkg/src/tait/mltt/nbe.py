"""Typed NbE for the dependent fragment.

The semantic domain follows the simply typed one: de Bruijn levels for
neutral variables, defunctionalized closures, and an explicit ``depth`` (the
length of the context being read back into) threaded through everything that
may have to reify.

Decoding a code is computed during evaluation: ``El`` of ``ans``/``pi``/
``sigma`` becomes ``Ans``/``Pi``/``Sigma``, and ``El`` of a neutral code is
the neutral type ``VElNeutral``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from tait.errors import InternalInvariantViolation, LevelOutOfRange
from tait.mltt import syntax as s
from tait.mltt.syntax import DTerm

# ---------------------------------------------------------------------------
# Values


@dataclass(frozen=True)
class DClosure:
    env: tuple
    body: DTerm

    def __call__(self, v: DValue, depth: int) -> DValue:
        return eval((*self.env, v), self.body, depth)


@dataclass(frozen=True)
class VYes:
    pass


@dataclass(frozen=True)
class VNo:
    pass


@dataclass(frozen=True)
class VAns:
    pass


@dataclass(frozen=True)
class VU:
    pass


@dataclass(frozen=True)
class VPi:
    domain: DValue
    codomain: DClosure


@dataclass(frozen=True)
class VSigma:
    domain: DValue
    codomain: DClosure


@dataclass(frozen=True)
class VLam:
    body: DClosure


@dataclass(frozen=True)
class VPair:
    fst: DValue
    snd: DValue


@dataclass(frozen=True)
class VCodeAns:
    pass


@dataclass(frozen=True)
class VCodePi:
    domain: DValue
    codomain: DClosure


@dataclass(frozen=True)
class VCodeSigma:
    domain: DValue
    codomain: DClosure


@dataclass(frozen=True)
class VNeutral:
    type: DValue
    spine: DNe


@dataclass(frozen=True)
class VElNeutral:
    code: DNe


DValue = Union[
    VYes, VNo, VAns, VU, VPi, VSigma, VLam, VPair, VCodeAns, VCodePi, VCodeSigma, VNeutral, VElNeutral
]

# ---------------------------------------------------------------------------
# Neutral and normal forms (terms and types)


@dataclass(frozen=True)
class NVar:
    level: int


@dataclass(frozen=True)
class NApp:
    neutral: DNe
    arg: DNf


@dataclass(frozen=True)
class NFst:
    neutral: DNe


@dataclass(frozen=True)
class NSnd:
    neutral: DNe


DNe = Union[NVar, NApp, NFst, NSnd]


@dataclass(frozen=True)
class NfYes:
    pass


@dataclass(frozen=True)
class NfNo:
    pass


@dataclass(frozen=True)
class NfAns:
    pass


@dataclass(frozen=True)
class NfU:
    pass


@dataclass(frozen=True)
class NfPi:
    domain: DNf
    codomain: DNf


@dataclass(frozen=True)
class NfSigma:
    domain: DNf
    codomain: DNf


@dataclass(frozen=True)
class NfEl:
    """The neutral type ``El u``."""

    code: DNe


@dataclass(frozen=True)
class NfLam:
    body: DNf


@dataclass(frozen=True)
class NfPair:
    fst: DNf
    snd: DNf


@dataclass(frozen=True)
class NfCodeAns:
    pass


@dataclass(frozen=True)
class NfCodePi:
    domain: DNf
    codomain: DNf


@dataclass(frozen=True)
class NfCodeSigma:
    domain: DNf
    codomain: DNf


@dataclass(frozen=True)
class NfUp:
    """A neutral term at a type without eta: Ans, U, or a neutral type."""

    neutral: DNe


DNf = Union[
    NfYes, NfNo, NfAns, NfU, NfPi, NfSigma, NfEl, NfLam, NfPair, NfCodeAns, NfCodePi, NfCodeSigma, NfUp
]

# ---------------------------------------------------------------------------
# Evaluation


def eval(env: tuple, t: DTerm, depth: int | None = None) -> DValue:
    if depth is None:
        depth = len(env)
    match t:
        case s.Var(i):
            if not 0 <= i < len(env):
                raise InternalInvariantViolation(f"variable {i} outside an environment of length {len(env)}")
            return env[-1 - i]
        case s.Yes():
            return VYes()
        case s.No():
            return VNo()
        case s.Ans():
            return VAns()
        case s.U():
            return VU()
        case s.CodeAns():
            return VCodeAns()
        case s.El(code):
            return el(eval(env, code, depth))
        case s.Pi(a, b):
            return VPi(eval(env, a, depth), DClosure(env, b))
        case s.Sigma(a, b):
            return VSigma(eval(env, a, depth), DClosure(env, b))
        case s.CodePi(a, b):
            return VCodePi(eval(env, a, depth), DClosure(env, b))
        case s.CodeSigma(a, b):
            return VCodeSigma(eval(env, a, depth), DClosure(env, b))
        case s.Lam(body):
            return VLam(DClosure(env, body))
        case s.App(f, a):
            return apply(eval(env, f, depth), eval(env, a, depth), depth)
        case s.Pair(a, b):
            return VPair(eval(env, a, depth), eval(env, b, depth))
        case s.Fst(p):
            return fst(eval(env, p, depth))
        case s.Snd(p):
            return snd(eval(env, p, depth))
        case s.Ann(x, _):
            return eval(env, x, depth)
    raise InternalInvariantViolation(f"not a term: {t!r}")


def el(code: DValue) -> DValue:
    """Decode a code into the type it names."""
    match code:
        case VCodeAns():
            return VAns()
        case VCodePi(a, b):
            return VPi(el(a), DClosure(b.env, s.El(b.body)))
        case VCodeSigma(a, b):
            return VSigma(el(a), DClosure(b.env, s.El(b.body)))
        case VNeutral(VU(), n):
            return VElNeutral(n)
    raise InternalInvariantViolation(f"El applied to a non-code {code!r}")


def apply(f: DValue, a: DValue, depth: int | None = None) -> DValue:
    if depth is None:
        depth = max(min_depth(f), min_depth(a))
    match f:
        case VLam(body):
            return body(a, depth)
        case VNeutral(VPi(dom, cod), n):
            return reflect(cod(a, depth), NApp(n, reify(dom, a, depth)), depth)
    raise InternalInvariantViolation(f"cannot apply {f!r}")


def fst(v: DValue) -> DValue:
    if isinstance(v, VPair):
        return v.fst
    raise InternalInvariantViolation(f"first projection of {v!r}")


def snd(v: DValue) -> DValue:
    if isinstance(v, VPair):
        return v.snd
    raise InternalInvariantViolation(f"second projection of {v!r}")


def min_depth(v) -> int:
    """One more than the largest level occurring in a value or normal form."""
    match v:
        case NVar(level):
            return level + 1
        case DClosure(env, _):
            return max((min_depth(e) for e in env), default=0)
        case VYes() | VNo() | VAns() | VU() | VCodeAns():
            return 0
        case tuple():
            return max((min_depth(e) for e in v), default=0)
    fields = getattr(v, "__dataclass_fields__", None)
    if fields is None:
        return 0
    return max((min_depth(getattr(v, name)) for name in fields), default=0)


def reflect(ty: DValue, n: DNe, depth: int | None = None) -> DValue:
    """Turn a neutral of type ``ty`` into a value; Sigma neutrals split eagerly."""
    if depth is None:
        depth = max(min_depth(ty), min_depth(n))
    match ty:
        case VSigma(a, b):
            first = reflect(a, NFst(n), depth)
            return VPair(first, reflect(b(first, depth), NSnd(n), depth))
        case VAns() | VU() | VPi() | VElNeutral():
            return VNeutral(ty, n)
    raise InternalInvariantViolation(f"not a type: {ty!r}")


def reify(ty: DValue, v: DValue, fresh_level: int) -> DNf:
    d = fresh_level
    match ty, v:
        case VAns(), VYes():
            return NfYes()
        case VAns(), VNo():
            return NfNo()
        case VAns() | VU() | VElNeutral(), VNeutral(_, n):
            return NfUp(n)
        case VU(), VCodeAns():
            return NfCodeAns()
        case VU(), VCodePi(a, b) | VCodeSigma(a, b):
            x = reflect(el(a), NVar(d), d + 1)
            dom = reify(VU(), a, d)
            cod = reify(VU(), b(x, d + 1), d + 1)
            return NfCodePi(dom, cod) if isinstance(v, VCodePi) else NfCodeSigma(dom, cod)
        case VPi(a, b), _:
            x = reflect(a, NVar(d), d + 1)
            return NfLam(reify(b(x, d + 1), apply(v, x, d + 1), d + 1))
        case VSigma(a, b), VPair(x, y):
            return NfPair(reify(a, x, d), reify(b(x, d), y, d))
    raise InternalInvariantViolation(f"cannot reify {v!r} at {ty!r}")


def reify_ty(ty: DValue, fresh_level: int) -> DNf:
    d = fresh_level
    match ty:
        case VAns():
            return NfAns()
        case VU():
            return NfU()
        case VPi(a, b) | VSigma(a, b):
            x = reflect(a, NVar(d), d + 1)
            dom = reify_ty(a, d)
            cod = reify_ty(b(x, d + 1), d + 1)
            return NfPi(dom, cod) if isinstance(ty, VPi) else NfSigma(dom, cod)
        case VElNeutral(n):
            return NfEl(n)
    raise InternalInvariantViolation(f"not a type: {ty!r}")


# ---------------------------------------------------------------------------
# Back to syntax


def embed_ne(n: DNe, depth: int) -> DTerm:
    match n:
        case NVar(level):
            if not 0 <= level < depth:
                raise LevelOutOfRange(level, depth)
            return s.Var(depth - 1 - level)
        case NApp(f, a):
            return s.App(embed_ne(f, depth), embed_nf(a, depth))
        case NFst(p):
            return s.Fst(embed_ne(p, depth))
        case NSnd(p):
            return s.Snd(embed_ne(p, depth))
    raise InternalInvariantViolation(f"not a neutral form: {n!r}")


def embed_nf(n: DNf, depth: int = 0) -> DTerm:
    match n:
        case NfYes():
            return s.Yes()
        case NfNo():
            return s.No()
        case NfAns():
            return s.Ans()
        case NfU():
            return s.U()
        case NfCodeAns():
            return s.CodeAns()
        case NfEl(code):
            return s.El(embed_ne(code, depth))
        case NfUp(ne):
            return embed_ne(ne, depth)
        case NfLam(body):
            return s.Lam(embed_nf(body, depth + 1))
        case NfPair(a, b):
            return s.Pair(embed_nf(a, depth), embed_nf(b, depth))
        case NfPi(a, b):
            return s.Pi(embed_nf(a, depth), embed_nf(b, depth + 1))
        case NfSigma(a, b):
            return s.Sigma(embed_nf(a, depth), embed_nf(b, depth + 1))
        case NfCodePi(a, b):
            return s.CodePi(embed_nf(a, depth), embed_nf(b, depth + 1))
        case NfCodeSigma(a, b):
            return s.CodeSigma(embed_nf(a, depth), embed_nf(b, depth + 1))
    raise InternalInvariantViolation(f"not a normal form: {n!r}")

"""Shared term/type syntax for the dependent fragment.

Types and terms live in one AST. ``Pi``, ``Sigma``, ``CodePi`` and
``CodeSigma`` bind one variable in their second argument, as does ``Lam``.
``Ann`` is a type ascription; it is how an introduction form gets into an
eliminator position, since ``Lam`` and ``Pair`` only check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Yes:
    pass


@dataclass(frozen=True)
class No:
    pass


@dataclass(frozen=True)
class Ans:
    pass


@dataclass(frozen=True)
class U:
    pass


@dataclass(frozen=True)
class El:
    code: DTerm


@dataclass(frozen=True)
class Pi:
    domain: DTerm
    codomain: DTerm


@dataclass(frozen=True)
class Sigma:
    domain: DTerm
    codomain: DTerm


@dataclass(frozen=True)
class Lam:
    body: DTerm


@dataclass(frozen=True)
class App:
    fn: DTerm
    arg: DTerm


@dataclass(frozen=True)
class Pair:
    fst: DTerm
    snd: DTerm


@dataclass(frozen=True)
class Fst:
    pair: DTerm


@dataclass(frozen=True)
class Snd:
    pair: DTerm


@dataclass(frozen=True)
class CodeAns:
    pass


@dataclass(frozen=True)
class CodePi:
    domain: DTerm
    codomain: DTerm


@dataclass(frozen=True)
class CodeSigma:
    domain: DTerm
    codomain: DTerm


@dataclass(frozen=True)
class Ann:
    term: DTerm
    type: DTerm


DTerm = Union[Var, Yes, No, Ans, U, El, Pi, Sigma, Lam, App, Pair, Fst, Snd, CodeAns, CodePi, CodeSigma, Ann]

BINDERS = (Pi, Sigma, CodePi, CodeSigma)


def size(t: DTerm) -> int:
    """Constructor count. Ascriptions are free and their types are not counted."""
    match t:
        case Ann(x, _):
            return size(x)
        case El(x) | Lam(x) | Fst(x) | Snd(x):
            return 1 + size(x)
        case Pi(a, b) | Sigma(a, b) | App(a, b) | Pair(a, b) | CodePi(a, b) | CodeSigma(a, b):
            return 1 + size(a) + size(b)
        case _:
            return 1


def shift(t: DTerm, by: int, cutoff: int = 0) -> DTerm:
    """Add ``by`` to every variable index at or above ``cutoff``."""
    match t:
        case Var(i):
            return Var(i + by) if i >= cutoff else t
        case El(x) | Fst(x) | Snd(x):
            return type(t)(shift(x, by, cutoff))
        case Lam(body):
            return Lam(shift(body, by, cutoff + 1))
        case Pi(a, b) | Sigma(a, b) | CodePi(a, b) | CodeSigma(a, b):
            return type(t)(shift(a, by, cutoff), shift(b, by, cutoff + 1))
        case App(a, b) | Pair(a, b):
            return type(t)(shift(a, by, cutoff), shift(b, by, cutoff))
        case Ann(x, ty):
            return Ann(shift(x, by, cutoff), shift(ty, by, cutoff))
        case _:
            return t


def scope(t: DTerm) -> int:
    """Smallest context length in which ``t`` is well-scoped."""
    match t:
        case Var(i):
            return i + 1
        case El(x) | Fst(x) | Snd(x):
            return scope(x)
        case Lam(body):
            return max(scope(body) - 1, 0)
        case Pi(a, b) | Sigma(a, b) | CodePi(a, b) | CodeSigma(a, b):
            return max(scope(a), scope(b) - 1)
        case App(a, b) | Pair(a, b) | Ann(a, b):
            return max(scope(a), scope(b))
        case _:
            return 0


def mentions(t: DTerm, index: int) -> bool:
    """Whether variable ``index`` occurs free in ``t``."""
    match t:
        case Var(i):
            return i == index
        case El(x) | Fst(x) | Snd(x):
            return mentions(x, index)
        case Lam(body):
            return mentions(body, index + 1)
        case Pi(a, b) | Sigma(a, b) | CodePi(a, b) | CodeSigma(a, b):
            return mentions(a, index) or mentions(b, index + 1)
        case App(a, b) | Pair(a, b) | Ann(a, b):
            return mentions(a, index) or mentions(b, index)
        case _:
            return False


def arrow(a: DTerm, b: DTerm) -> Pi:
    """Non-dependent function type; ``b`` is written in the outer scope."""
    return Pi(a, shift(b, 1))


def product(a: DTerm, b: DTerm) -> Sigma:
    return Sigma(a, shift(b, 1))

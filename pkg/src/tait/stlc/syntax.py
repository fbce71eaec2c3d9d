"""Simply typed terms over Ans, Unit, products and functions.

Variables are de Bruijn indices. A context is a tuple of types with the
innermost binding last, so ``Var(0)`` refers to ``ctx[-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from tait.errors import (
    ArgumentMismatch,
    IndexOutOfRange,
    NotAFunction,
    NotAProduct,
    UnboundVariable,
)

# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class Ans:
    def __str__(self):
        return "Ans"


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "Unit"


@dataclass(frozen=True)
class Prod:
    left: SimpleType
    right: SimpleType

    def __str__(self):
        return f"{_type_atom(self.left, 1)} * {_type_atom(self.right, 1)}"


@dataclass(frozen=True)
class Fun:
    domain: SimpleType
    codomain: SimpleType

    def __str__(self):
        return f"{_type_atom(self.domain, 0)} -> {self.codomain}"


SimpleType = Union[Ans, Unit, Prod, Fun]
Context = tuple  # tuple[SimpleType, ...], innermost last

ANS = Ans()
UNIT = Unit()


def _type_atom(ty, prec):
    # prec 0: left of an arrow, 1: operand of *
    if isinstance(ty, Fun) or (prec == 1 and isinstance(ty, Prod)):
        return f"({ty})"
    return str(ty)


def type_size(ty: SimpleType) -> int:
    match ty:
        case Prod(a, b) | Fun(a, b):
            return 1 + type_size(a) + type_size(b)
        case _:
            return 1


def subtypes(ty: SimpleType) -> list[SimpleType]:
    """All subtrees of ``ty``, children before parents, without repeats."""
    out: list[SimpleType] = []

    def go(t):
        if isinstance(t, (Prod, Fun)):
            go(t.left if isinstance(t, Prod) else t.domain)
            go(t.right if isinstance(t, Prod) else t.codomain)
        if t not in out:
            out.append(t)

    go(ty)
    return out


# ---------------------------------------------------------------------------
# Terms


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
class Star:
    pass


@dataclass(frozen=True)
class Pair:
    fst: SimpleTerm
    snd: SimpleTerm


@dataclass(frozen=True)
class Fst:
    pair: SimpleTerm


@dataclass(frozen=True)
class Snd:
    pair: SimpleTerm


@dataclass(frozen=True)
class Lam:
    annotation: SimpleType
    body: SimpleTerm


@dataclass(frozen=True)
class App:
    fn: SimpleTerm
    arg: SimpleTerm


SimpleTerm = Union[Var, Yes, No, Star, Pair, Fst, Snd, Lam, App]

YES = Yes()
NO = No()
STAR = Star()


def size(t: SimpleTerm) -> int:
    """Number of term constructors; binder annotations are not counted."""
    match t:
        case Pair(a, b) | App(a, b):
            return 1 + size(a) + size(b)
        case Fst(p) | Snd(p):
            return 1 + size(p)
        case Lam(_, body):
            return 1 + size(body)
        case _:
            return 1


def scope(t: SimpleTerm) -> int:
    """Smallest context length in which ``t`` is well-scoped."""
    match t:
        case Var(i):
            return i + 1
        case Pair(a, b) | App(a, b):
            return max(scope(a), scope(b))
        case Fst(p) | Snd(p):
            return scope(p)
        case Lam(_, body):
            return max(scope(body) - 1, 0)
        case _:
            return 0


def is_closed(t: SimpleTerm) -> bool:
    return scope(t) == 0


def well_scoped(ctx: Context, t: SimpleTerm) -> bool:
    return scope(t) <= len(ctx)


# ---------------------------------------------------------------------------
# Typing


def lookup(ctx: Context, index: int) -> SimpleType:
    if not 0 <= index < len(ctx):
        raise UnboundVariable(index)
    return ctx[-1 - index]


def infer(ctx: Context, t: SimpleTerm) -> SimpleType:
    match t:
        case Var(i):
            return lookup(ctx, i)
        case Yes() | No():
            return ANS
        case Star():
            return UNIT
        case Pair(a, b):
            return Prod(infer(ctx, a), infer(ctx, b))
        case Fst(p):
            ty = infer(ctx, p)
            if not isinstance(ty, Prod):
                raise NotAProduct(ty)
            return ty.left
        case Snd(p):
            ty = infer(ctx, p)
            if not isinstance(ty, Prod):
                raise NotAProduct(ty)
            return ty.right
        case Lam(dom, body):
            return Fun(dom, infer((*ctx, dom), body))
        case App(f, a):
            fty = infer(ctx, f)
            if not isinstance(fty, Fun):
                raise NotAFunction(fty)
            aty = infer(ctx, a)
            if aty != fty.domain:
                raise ArgumentMismatch(fty.domain, aty)
            return fty.codomain
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Renamings and substitutions


@dataclass(frozen=True)
class Renaming:
    """Sends index ``i`` of the source context to ``mapping[i]`` in the target.

    Arbitrary maps are allowed, including non-injective ones.
    """

    target_length: int
    mapping: tuple[int, ...]

    @property
    def source_length(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, n: int) -> Renaming:
        return cls(n, tuple(range(n)))

    @classmethod
    def weakening(cls, n: int, by: int = 1) -> Renaming:
        """Context of length ``n`` into the same context extended by ``by`` entries."""
        return cls(n + by, tuple(i + by for i in range(n)))

    def __call__(self, index: int) -> int:
        if not 0 <= index < len(self.mapping):
            raise IndexOutOfRange(index, len(self.mapping))
        j = self.mapping[index]
        if not 0 <= j < self.target_length:
            raise IndexOutOfRange(j, self.target_length)
        return j

    def lift(self) -> Renaming:
        return Renaming(self.target_length + 1, (0, *(j + 1 for j in self.mapping)))

    def then(self, other: Renaming) -> Renaming:
        """``other ∘ self``: apply ``self`` first."""
        return Renaming(other.target_length, tuple(other(self(i)) for i in range(self.source_length)))


def rename(t: SimpleTerm, r: Renaming) -> SimpleTerm:
    match t:
        case Var(i):
            return Var(r(i))
        case Pair(a, b):
            return Pair(rename(a, r), rename(b, r))
        case Fst(p):
            return Fst(rename(p, r))
        case Snd(p):
            return Snd(rename(p, r))
        case Lam(dom, body):
            return Lam(dom, rename(body, r.lift()))
        case App(f, a):
            return App(rename(f, r), rename(a, r))
        case _:
            return t


def weaken(t: SimpleTerm, n: int, by: int = 1) -> SimpleTerm:
    """Move ``t`` from a context of length ``n`` to one with ``by`` more entries."""
    return rename(t, Renaming.weakening(n, by))


@dataclass(frozen=True)
class Substitution:
    """Simultaneous substitution; ``terms[i]`` replaces ``Var(i)``.

    The replacement terms live in a context of length ``target_length``.
    """

    terms: tuple[SimpleTerm, ...]
    target_length: int

    @classmethod
    def identity(cls, n: int) -> Substitution:
        return cls(tuple(Var(i) for i in range(n)), n)

    @classmethod
    def single(cls, arg: SimpleTerm, n: int) -> Substitution:
        """Instantiate the innermost variable of a length ``n + 1`` context with ``arg``."""
        return cls((arg, *(Var(i) for i in range(n))), n)

    def __getitem__(self, index: int) -> SimpleTerm:
        if not 0 <= index < len(self.terms):
            raise IndexOutOfRange(index, len(self.terms))
        return self.terms[index]

    def lift(self) -> Substitution:
        shifted = tuple(weaken(s, self.target_length) for s in self.terms)
        return Substitution((Var(0), *shifted), self.target_length + 1)

    def then(self, other: Substitution) -> Substitution:
        """Apply ``self`` and then ``other``."""
        return Substitution(tuple(subst(s, other) for s in self.terms), other.target_length)


def subst(t: SimpleTerm, s: Substitution) -> SimpleTerm:
    match t:
        case Var(i):
            return s[i]
        case Pair(a, b):
            return Pair(subst(a, s), subst(b, s))
        case Fst(p):
            return Fst(subst(p, s))
        case Snd(p):
            return Snd(subst(p, s))
        case Lam(dom, body):
            return Lam(dom, subst(body, s.lift()))
        case App(f, a):
            return App(subst(f, s), subst(a, s))
        case _:
            return t


def instantiate(body: SimpleTerm, arg: SimpleTerm) -> SimpleTerm:
    """``body[Var 0 := arg]``, with the remaining free variables shifted down."""
    n = max(scope(body) - 1, scope(arg))
    return subst(body, Substitution.single(arg, n))

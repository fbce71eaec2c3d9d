"""Binary parametricity, checked on finite relation instances.

A polymorphic type is read relationally: each type variable is interpreted by
a pair of closed types and a relation between their closed terms, arrows
send related arguments to related results, and a ``forall`` quantifies over
all such interpretations. Relations here are finite and supplied by the
caller, so what gets checked is an instance of a free theorem, not the
theorem itself.

Function-typed arguments are drawn from a computed candidate set: the
identity (when the type allows it), constant functions returning listed
pairs, and any caller-supplied candidates, keeping only pairs that are
themselves related. This under-approximates the full function relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from tait.errors import KernelError, TypingError
from tait.systemf.syntax import (
    DEFAULT_FUEL,
    App,
    Arrow,
    Forall,
    FTerm,
    FType,
    Lam,
    TVar,
    TyApp,
    Var,
    close_type,
    f_infer,
    f_normalize,
    type_scope,
)


class IllTyped(TypingError):
    pass


class UnsupportedQuantifier(KernelError):
    exit_code = 3
    kind = "type"

    def __init__(self):
        super().__init__("a forall under an arrow has no finite relational reading; use free_theorem_check")


class InstantiationArity(TypingError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} relation instances, got {got}")
        self.expected = expected
        self.got = got


Pair = tuple  # tuple[FTerm, FTerm]


@dataclass(frozen=True)
class RelInstance:
    """Two closed types and a finite relation between their closed normal terms."""

    left_type: FType
    right_type: FType
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        for ty in (self.left_type, self.right_type):
            if type_scope(ty) != 0:
                raise IllTyped(f"relation instance type {ty!r} is not closed")
        normal = []
        for left, right in self.pairs:
            _expect_type(left, self.left_type)
            _expect_type(right, self.right_type)
            pair = (f_normalize(left), f_normalize(right))
            if pair not in normal:
                normal.append(pair)
        object.__setattr__(self, "pairs", tuple(normal))

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs


RelEnv = tuple  # tuple[RelInstance, ...], innermost type variable last


def _expect_type(t: FTerm, ty: FType) -> None:
    actual = f_infer(0, (), t)
    if actual != ty:
        raise IllTyped(f"{t!r} has type {actual!r}, expected {ty!r}")


@dataclass(frozen=True)
class Witness:
    """The first pair found outside the relation, with the arguments that led there."""

    type: FType
    left: FTerm
    right: FTerm
    arguments: tuple[Pair, ...] = ()


@dataclass(frozen=True)
class Pass:
    checked: int = 0


@dataclass(frozen=True)
class Fail:
    witness: Witness
    instantiation: int = 0


Verdict = Union[Pass, Fail]


@dataclass
class _Checker:
    env: RelEnv
    candidates: tuple[Pair, ...]
    fuel: int
    _memo: dict = field(default_factory=dict)

    def sides(self, ty: FType) -> tuple[FType, FType]:
        return (
            close_type(ty, [inst.left_type for inst in self.env]),
            close_type(ty, [inst.right_type for inst in self.env]),
        )

    def violation(self, ty: FType, left: FTerm, right: FTerm) -> Witness | None:
        match ty:
            case TVar(i):
                inst = self.env[-1 - i]
                pair = (f_normalize(left, self.fuel), f_normalize(right, self.fuel))
                return None if pair in inst else Witness(ty, *pair)
            case Arrow(dom, cod):
                for a_left, a_right in self.related(dom):
                    w = self.violation(cod, App(left, a_left), App(right, a_right))
                    if w is not None:
                        return Witness(w.type, w.left, w.right, ((a_left, a_right), *w.arguments))
                return None
            case Forall():
                raise UnsupportedQuantifier()
        raise TypeError(f"not a type: {ty!r}")

    def related(self, ty: FType) -> tuple[Pair, ...]:
        """Finite set of argument pairs related at ``ty``."""
        if ty in self._memo:
            return self._memo[ty]
        match ty:
            case TVar(i):
                out = self.env[-1 - i].pairs
            case Arrow(dom, cod):
                left_ty, right_ty = self.sides(ty)
                pool: list[Pair] = []
                if left_ty.domain == left_ty.codomain and right_ty.domain == right_ty.codomain:
                    pool.append((Lam(left_ty.domain, Var(0)), Lam(right_ty.domain, Var(0))))
                for b_left, b_right in self.related(cod):
                    pool.append((Lam(left_ty.domain, b_left), Lam(right_ty.domain, b_right)))
                for c_left, c_right in self.candidates:
                    if f_infer(0, (), c_left) == left_ty and f_infer(0, (), c_right) == right_ty:
                        pool.append((c_left, c_right))
                out = []
                for f_left, f_right in pool:
                    pair = (f_normalize(f_left, self.fuel), f_normalize(f_right, self.fuel))
                    if pair not in out and self.violation(ty, *pair) is None:
                        out.append(pair)
                out = tuple(out)
            case _:
                raise UnsupportedQuantifier()
        self._memo[ty] = out
        return out


def rel_member(
    ty: FType,
    env: Sequence[RelInstance],
    left: FTerm,
    right: FTerm,
    candidates: Iterable[Pair] = (),
    fuel: int = DEFAULT_FUEL,
) -> bool:
    env = tuple(env)
    if type_scope(ty) > len(env):
        raise IllTyped(f"type {ty!r} has more free variables than the relation environment")
    checker = _Checker(env, tuple(candidates), fuel)
    left_ty, right_ty = checker.sides(ty)
    _expect_type(left, left_ty)
    _expect_type(right, right_ty)
    return checker.violation(ty, left, right) is None


def leading_foralls(ty: FType) -> int:
    n = 0
    while isinstance(ty, Forall):
        ty, n = ty.body, n + 1
    return n


def free_theorem_check(
    t: FTerm,
    ty: FType,
    instantiations: Sequence[Sequence[RelInstance]],
    candidates: Iterable[Pair] = (),
    fuel: int = DEFAULT_FUEL,
) -> Verdict:
    """Check that ``t`` relates to itself under every supplied instantiation.

    Each instantiation gives one relation instance per leading ``forall`` of
    ``ty``, outermost first.
    """
    actual = f_infer(0, (), t)
    if actual != ty:
        raise IllTyped(f"term has type {actual!r}, not {ty!r}")
    arity = leading_foralls(ty)
    candidates = tuple(candidates)
    for n, inst in enumerate(instantiations):
        inst = tuple(inst)
        if len(inst) != arity:
            raise InstantiationArity(arity, len(inst))
        left, right, body = t, t, ty
        for rel in inst:
            left, right, body = TyApp(left, rel.left_type), TyApp(right, rel.right_type), body.body
        w = _Checker(inst, candidates, fuel).violation(body, left, right)
        if w is not None:
            return Fail(w, n)
    return Pass(len(instantiations))


# ---------------------------------------------------------------------------
# Printing the relational statement

_TYPE_NAMES = "ABCDEGHIJK"
_REL_NAMES = ("R", "S", "P", "Q", "R2", "S2", "P2", "Q2")
_ARG_NAMES = "abcdeghijkmnopqrsuvwxyz"


def free_theorem_print(ty: FType, subject: str | None = None, free_names: Sequence[str] = ()) -> str:
    """Render the binary relational reading of ``ty`` as one line of text.

    ``free_names`` names the free type variables, innermost last; their
    relations print as ``R_X``. ``subject`` defaults to ``t`` for polymorphic
    types and ``f`` otherwise.
    """
    if subject is None:
        subject = "t" if isinstance(ty, Forall) else "f"
    n_free = type_scope(ty)
    names = list(free_names)
    while len(names) < n_free:
        names.insert(0, "XYZW"[len(names) % 4] + ("" if len(names) < 4 else str(len(names) // 4)))
    # one entry per type variable in scope, innermost last: (left type, right type, relation)
    scope = [(f"{x}_L", f"{x}_R", f"R_{x}") for x in names[-n_free:]] if n_free else []
    clauses: list[str] = []
    uses_function_relation = False
    left, right = subject, subject
    binders = args = 0

    def rel(t: FType, scope) -> str:
        nonlocal uses_function_relation
        match t:
            case TVar(i):
                return scope[-1 - i][2]
            case Arrow(a, b):
                uses_function_relation = True
                return f"({rel(a, scope)} -> {rel(b, scope)})"
            case Forall(body):
                inner = [*scope, ("?_L", "?_R", "any relation")]
                return f"(forall relations: {rel(body, inner)})"
        raise TypeError(f"not a type: {t!r}")

    body = ty
    while True:
        match body:
            case Forall(inner):
                tn = _TYPE_NAMES[binders % len(_TYPE_NAMES)] + ("" if binders < len(_TYPE_NAMES) else str(binders))
                rn = _REL_NAMES[binders % len(_REL_NAMES)]
                binders += 1
                clauses.append(f"for all {tn}_L, {tn}_R, {rn}")
                scope = [*scope, (f"{tn}_L", f"{tn}_R", rn)]
                left, right = f"{left} {tn}_L", f"{right} {tn}_R"
                body = inner
            case Arrow(a, b):
                an = _ARG_NAMES[args % len(_ARG_NAMES)] + ("" if args < len(_ARG_NAMES) else str(args))
                args += 1
                clauses.append(f"for all ({an}_L, {an}_R) ∈ {rel(a, scope)}")
                left, right = f"{left} {an}_L", f"{right} {an}_R"
                body = b
            case TVar(i):
                clauses.append(f"({left}, {right}) ∈ {scope[-1 - i][2]}")
                break
    text = ": ".join(clauses)
    if uses_function_relation:
        text += "; where (g_L, g_R) ∈ (R1 -> R2) iff for all (x_L, x_R) ∈ R1: (g_L x_L, g_R x_R) ∈ R2"
    return text

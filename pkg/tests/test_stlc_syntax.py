import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import random_context, random_renaming, random_term, renamed_terms, typed_terms
from tait.errors import ArgumentMismatch, IndexOutOfRange, NotAFunction, NotAProduct, UnboundVariable
from tait.stlc.syntax import (
    ANS,
    NO,
    STAR,
    UNIT,
    YES,
    App,
    Fst,
    Fun,
    Lam,
    Pair,
    Prod,
    Renaming,
    Snd,
    Substitution,
    Var,
    infer,
    instantiate,
    is_closed,
    rename,
    scope,
    size,
    subst,
    subtypes,
    type_size,
    weaken,
    well_scoped,
)

ID = Lam(ANS, Var(0))


def test_infer_constants():
    assert infer((), YES) == ANS
    assert infer((), NO) == ANS
    assert infer((), STAR) == UNIT


def test_infer_lambda_and_application():
    assert infer((), ID) == Fun(ANS, ANS)
    assert infer((), App(ID, YES)) == ANS
    twice = Lam(Fun(ANS, ANS), App(Var(0), App(Var(0), YES)))
    assert infer((), twice) == Fun(Fun(ANS, ANS), ANS)


def test_infer_pairs():
    p = Pair(YES, STAR)
    assert infer((), p) == Prod(ANS, UNIT)
    assert infer((), Fst(p)) == ANS
    assert infer((), Snd(p)) == UNIT


def test_infer_uses_innermost_binding_for_var_zero():
    ctx = (UNIT, ANS)
    assert infer(ctx, Var(0)) == ANS
    assert infer(ctx, Var(1)) == UNIT


@pytest.mark.parametrize(
    "ctx, term, err",
    [
        ((), Var(0), UnboundVariable),
        ((), App(YES, NO), NotAFunction),
        ((), Fst(YES), NotAProduct),
        ((), App(ID, STAR), ArgumentMismatch),
    ],
)
def test_infer_errors(ctx, term, err):
    with pytest.raises(err):
        infer(ctx, term)


def test_argument_mismatch_reports_both_types():
    with pytest.raises(ArgumentMismatch) as info:
        infer((), App(ID, STAR))
    assert info.value.expected == ANS
    assert info.value.actual == UNIT


def test_type_printing():
    assert str(Fun(Fun(ANS, ANS), ANS)) == "(Ans -> Ans) -> Ans"
    assert str(Fun(ANS, Fun(ANS, ANS))) == "Ans -> Ans -> Ans"
    assert str(Prod(ANS, Fun(UNIT, ANS))) == "Ans * (Unit -> Ans)"
    assert str(Fun(Prod(ANS, ANS), ANS)) == "Ans * Ans -> Ans"


def test_size_counts_term_nodes_only():
    assert size(YES) == 1
    assert size(ID) == 2
    assert size(Lam(Fun(Fun(ANS, ANS), ANS), Var(0))) == 2
    assert size(App(ID, Pair(YES, NO))) == 6


def test_type_size_and_subtypes():
    ty = Fun(Prod(ANS, UNIT), ANS)
    assert type_size(ty) == 5
    assert set(subtypes(ty)) == {ty, Prod(ANS, UNIT), ANS, UNIT}


def test_scope():
    assert scope(YES) == 0
    assert scope(Var(2)) == 3
    assert scope(Lam(ANS, Var(0))) == 0
    assert scope(Lam(ANS, Var(1))) == 1
    assert is_closed(ID)
    assert not is_closed(Var(0))
    assert well_scoped((ANS,), Var(0))
    assert not well_scoped((ANS,), Var(1))


def test_renaming_out_of_range():
    r = Renaming(2, (5,))
    with pytest.raises(IndexOutOfRange):
        r(0)
    with pytest.raises(IndexOutOfRange):
        Renaming.identity(1)(1)


def test_weaken_skips_bound_variables():
    t = Lam(ANS, App(Var(1), Var(0)))
    assert weaken(t, 1) == Lam(ANS, App(Var(2), Var(0)))


def test_non_injective_renaming():
    r = Renaming(1, (0, 0))
    assert rename(Pair(Var(0), Var(1)), r) == Pair(Var(0), Var(0))


def test_instantiate_shifts_remaining_free_variables():
    # body lives in [a, b] with b innermost; substitute for b
    body = Pair(Var(0), Var(1))
    assert instantiate(body, YES) == Pair(YES, Var(0))
    under = Lam(ANS, Pair(Var(1), Var(2)))
    assert instantiate(under, Var(0)) == Lam(ANS, Pair(Var(1), Var(1)))


def test_substitution_indexing():
    s = Substitution((YES, NO), 0)
    assert subst(Pair(Var(0), Var(1)), s) == Pair(YES, NO)
    with pytest.raises(IndexOutOfRange):
        subst(Var(2), s)


# --- category laws -----------------------------------------------------------


@given(typed_terms())
def test_identity_renaming_is_neutral(args):
    ctx, _, t = args
    assert rename(t, Renaming.identity(len(ctx))) == t


@given(typed_terms())
def test_identity_substitution_is_neutral(args):
    ctx, _, t = args
    assert subst(t, Substitution.identity(len(ctx))) == t


@given(renamed_terms(), st.data())
@settings(max_examples=200)
def test_renaming_composition(args, data):
    ctx, mid, r1, _, t = args
    choose = lambda n: data.draw(st.integers(0, n - 1))  # noqa: E731
    _, r2 = random_renaming(choose, mid)
    assert rename(t, r1.then(r2)) == rename(rename(t, r1), r2)


@given(renamed_terms())
def test_renaming_agrees_with_variable_substitution(args):
    _, target, r, _, t = args
    as_subst = Substitution(tuple(Var(j) for j in r.mapping), len(target))
    assert rename(t, r) == subst(t, as_subst)


@given(renamed_terms())
def test_renaming_preserves_types(args):
    ctx, target, r, ty, t = args
    assert infer(ctx, t) == ty
    assert infer(target, rename(t, r)) == ty


@given(typed_terms(), st.data())
@settings(max_examples=150)
def test_substitution_composition_and_typing(args, data):
    ctx, ty, t = args
    choose = lambda n: data.draw(st.integers(0, n - 1))  # noqa: E731
    mid = random_context(choose)
    s1 = Substitution(tuple(random_term(choose, mid, ctx[-1 - i], 2) for i in range(len(ctx))), len(mid))
    target = random_context(choose)
    s2 = Substitution(tuple(random_term(choose, target, mid[-1 - i], 2) for i in range(len(mid))), len(target))
    assert infer(mid, subst(t, s1)) == ty
    assert subst(t, s1.then(s2)) == subst(subst(t, s1), s2)

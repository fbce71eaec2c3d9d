import pytest
from hypothesis import given, settings

from strategies import typed_terms
from tait.errors import SizeOverflow
from tait.stlc.nbe import normalize
from tait.stlc.oracle import Stepped, step
from tait.stlc.set_model import (
    FALSE,
    NIL,
    TRUE,
    Atom,
    Table,
    Tuple,
    cardinality,
    consistency_check,
    environments,
    interp_tm,
    interp_ty,
)
from tait.stlc.syntax import ANS, NO, UNIT, YES, App, Fun, Lam, Pair, Prod, Var

THRICE = Lam(Fun(ANS, ANS), App(Var(0), App(Var(0), App(Var(0), YES))))
ONCE = Lam(Fun(ANS, ANS), App(Var(0), YES))


def test_ans_has_two_elements():
    assert set(interp_ty(ANS)) == {Atom("t"), Atom("f")}


def test_unit_is_a_singleton():
    assert interp_ty(UNIT) == (NIL,)


def test_function_space_sizes():
    assert len(interp_ty(Fun(ANS, ANS))) == 4
    assert len(interp_ty(Fun(Fun(ANS, ANS), ANS))) == 16
    assert cardinality(Prod(ANS, Fun(ANS, UNIT))) == 2


def test_elements_are_distinct_and_tables_total():
    ty = Fun(Prod(ANS, ANS), ANS)
    elems = interp_ty(ty)
    assert len(set(elems)) == len(elems) == 16
    dom = set(interp_ty(Prod(ANS, ANS)))
    for table in elems:
        assert {x for x, _ in table.graph} == dom


def test_size_overflow():
    big = Fun(Fun(Prod(ANS, Prod(ANS, ANS)), ANS), ANS)  # 2 ** (2 ** 8) elements
    assert cardinality(Fun(Fun(Prod(ANS, ANS), ANS), ANS)) == 65_536
    with pytest.raises(SizeOverflow):
        interp_ty(big)
    with pytest.raises(SizeOverflow):
        interp_ty(Fun(ANS, ANS), bound=3)


def test_constant_denotations():
    assert interp_tm((), (), YES) == TRUE
    assert interp_tm((), (), Pair(YES, NO)) == Tuple(TRUE, FALSE)


def test_lambda_denotes_a_table():
    neg_free = interp_tm((), (), Lam(ANS, Var(0)))
    assert isinstance(neg_free, Table)
    assert neg_free(TRUE) == TRUE and neg_free(FALSE) == FALSE


def test_consistency():
    assert consistency_check()


def test_environments_enumerate_products():
    envs = list(environments((ANS, UNIT)))
    assert envs == [(TRUE, NIL), (FALSE, NIL)]


def test_model_is_not_complete():
    # f o f o f = f for every f on a two-element set, but the terms differ
    assert normalize((), THRICE) != normalize((), ONCE)
    assert interp_tm((), (), THRICE) == interp_tm((), (), ONCE)


@given(typed_terms(depth=4))
@settings(max_examples=200)
def test_beta_steps_preserve_denotation(args):
    ctx, _, t = args
    r = step(t)
    if isinstance(r, Stepped):
        for env in environments(ctx):
            assert interp_tm(ctx, env, t) == interp_tm(ctx, env, r.term)


@given(typed_terms(depth=3))
@settings(max_examples=200)
def test_normal_form_has_same_denotation(args):
    from tait.stlc.nbe import embed_nf

    ctx, _, t = args
    nf = embed_nf(normalize(ctx, t), len(ctx))
    for env in environments(ctx):
        assert interp_tm(ctx, env, t) == interp_tm(ctx, env, nf)

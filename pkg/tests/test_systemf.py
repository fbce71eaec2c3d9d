import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tait.errors import ArgumentMismatch, FuelExhausted, NotAFunction, UnboundVariable
from tait.systemf.church import C0, C1, ID, ID_TYPE, NAT, SUC, TWO, X, church
from tait.systemf.enumerate import long_normal_inhabitants
from tait.systemf.param import (
    IllTyped,
    InstantiationArity,
    Pass,
    RelInstance,
    UnsupportedQuantifier,
    free_theorem_check,
    free_theorem_print,
    rel_member,
)
from tait.systemf.syntax import (
    App,
    Arrow,
    Forall,
    Lam,
    NotAForall,
    TVar,
    TyApp,
    TyLam,
    Var,
    f_infer,
    f_normalize,
    is_normal,
    tinstantiate,
)

T = ID_TYPE


def const(ty, value):
    return Lam(ty, value)


def test_infer_identity():
    assert f_infer(0, (), ID) == ID_TYPE


def test_infer_type_application():
    assert f_infer(0, (), TyApp(ID, T)) == Arrow(T, T)


def test_infer_unbound_type_variable():
    with pytest.raises(UnboundVariable) as info:
        f_infer(0, (), Lam(TVar(0), Var(0)))
    assert info.value.sort == "type"


@pytest.mark.parametrize(
    "term, err",
    [
        (Var(0), UnboundVariable),
        (App(ID, ID), NotAFunction),
        (TyApp(TyApp(ID, T), T), NotAForall),
        (App(TyApp(ID, T), C0), ArgumentMismatch),
    ],
)
def test_infer_errors(term, err):
    with pytest.raises(err):
        f_infer(0, (), term)


def test_tinstantiate_avoids_capture():
    # (forall Y. X -> Y)[X := Y'] where Y' is free
    body = Forall(Arrow(TVar(1), TVar(0)))
    assert tinstantiate(body, TVar(0)) == Forall(Arrow(TVar(1), TVar(0)))


def test_normalize_identity_application():
    assert f_normalize(App(TyApp(ID, T), ID)) == ID


def test_normalize_under_binders():
    inner = App(Lam(X, Var(0)), Var(0))
    t = TyLam(Lam(Arrow(X, X), Lam(X, App(Var(1), inner))))
    assert f_normalize(t) == church(1)


def test_church_two_applied_to_successor():
    t = App(App(TyApp(TWO, NAT), SUC), C0)
    assert f_normalize(t) == church(2) == f_normalize(App(SUC, App(SUC, C0)))


def test_normalize_fuel():
    t = App(App(TyApp(TWO, NAT), SUC), C0)
    with pytest.raises(FuelExhausted):
        f_normalize(t, fuel=2)


def test_membership_in_a_variable_relation():
    env = [RelInstance(NAT, NAT, ((C0, C1),))]
    assert rel_member(X, env, C0, C1)
    assert not rel_member(X, env, C0, C0)


def test_identity_function_is_related():
    env = [RelInstance(T, T, ((ID, ID),))]
    assert rel_member(Arrow(X, X), env, Lam(T, Var(0)), Lam(T, Var(0)))


def test_constant_function_breaks_the_relation():
    env = [RelInstance(NAT, NAT, ((C0, C1),))]
    assert not rel_member(Arrow(X, X), env, Lam(NAT, Var(0)), const(NAT, C0))


def test_rel_member_rejects_forall():
    with pytest.raises(UnsupportedQuantifier):
        rel_member(ID_TYPE, [], ID, ID)


def test_rel_member_checks_types():
    env = [RelInstance(NAT, NAT, ())]
    with pytest.raises(IllTyped):
        rel_member(X, env, ID, C0)


def test_relation_pairs_must_match_types():
    with pytest.raises(IllTyped):
        RelInstance(NAT, NAT, ((ID, C0),))
    with pytest.raises(IllTyped):
        RelInstance(X, NAT)


def test_relation_pairs_are_normalized():
    rel = RelInstance(T, T, ((App(TyApp(ID, T), ID), ID),))
    assert rel.pairs == ((ID, ID),)


def test_free_theorem_for_identity():
    inst = [RelInstance(T, T, ((ID, ID),))]
    assert free_theorem_check(ID, ID_TYPE, [inst]) == Pass(1)


def test_free_theorem_for_identity_with_empty_relation():
    assert free_theorem_check(ID, ID_TYPE, [[RelInstance(T, T, ())]]) == Pass(1)


def test_free_theorem_for_church_two():
    inst = [RelInstance(T, T, ((ID, ID),))]
    identity = (Lam(T, Var(0)), Lam(T, Var(0)))
    assert free_theorem_check(TWO, NAT, [inst], candidates=[identity]) == Pass(1)


def test_unrelated_candidates_are_discarded():
    # suc sends (c1, c1) to (c2, c2), outside the relation, so it is never used as an argument
    inst = [RelInstance(NAT, NAT, ((C0, C0), (C1, C1)))]
    assert not rel_member(Arrow(X, X), inst, SUC, SUC)
    assert free_theorem_check(TWO, NAT, [inst], candidates=[(SUC, SUC)]) == Pass(1)


def test_constant_candidates_are_generated():
    # with only constants available, two const_c x = c, which is related
    inst = [RelInstance(NAT, NAT, ((C0, C1),))]
    assert free_theorem_check(TWO, NAT, [inst]) == Pass(1)


def test_free_theorem_arity():
    with pytest.raises(InstantiationArity):
        free_theorem_check(ID, ID_TYPE, [[]])


def test_free_theorem_checks_the_term_type():
    with pytest.raises(IllTyped):
        free_theorem_check(ID, NAT, [[RelInstance(T, T, ())]])


def test_print_identity_theorem():
    assert free_theorem_print(ID_TYPE) == (
        "for all A_L, A_R, R: for all (a_L, a_R) ∈ R: (t A_L a_L, t A_R a_R) ∈ R"
    )


def test_print_open_arrow():
    assert free_theorem_print(Arrow(X, X), free_names=["X"]) == (
        "for all (a_L, a_R) ∈ R_X: (f a_L, f a_R) ∈ R_X"
    )


def test_print_church_numeral_type():
    text = free_theorem_print(NAT)
    assert text.startswith(
        "for all A_L, A_R, R: for all (a_L, a_R) ∈ (R -> R): for all (b_L, b_R) ∈ R: "
        "(t A_L a_L b_L, t A_R a_R b_R) ∈ R"
    )
    assert "; where (g_L, g_R) ∈ (R1 -> R2) iff" in text


def test_identity_type_has_exactly_one_inhabitant():
    assert long_normal_inhabitants(ID_TYPE, 6) == [ID]


def test_church_numerals_are_the_small_inhabitants_of_nat():
    # church(n) has 4 + 2n nodes
    assert long_normal_inhabitants(NAT, 8) == [church(0), church(1), church(2)]
    assert long_normal_inhabitants(NAT, 7) == [church(0), church(1)]


# --- properties ----------------------------------------------------------------

NUMERALS = [church(n) for n in range(4)]
CLOSED = [
    (App(App(TyApp(church(a), NAT), SUC), church(b)), NAT) for a in range(3) for b in range(3)
] + [(App(TyApp(ID, T), ID), T), (TyApp(TWO, T), Arrow(Arrow(T, T), Arrow(T, T)))]


@pytest.mark.parametrize("term, ty", CLOSED)
def test_subject_reduction(term, ty):
    assert f_infer(0, (), term) == ty
    nf = f_normalize(term)
    assert is_normal(nf)
    assert f_infer(0, (), nf) == ty


@given(st.lists(st.tuples(st.sampled_from(NUMERALS), st.sampled_from(NUMERALS)), max_size=5))
@settings(max_examples=60)
def test_identity_theorem_holds_for_random_relations(pairs):
    inst = [RelInstance(NAT, NAT, tuple(pairs))]
    assert isinstance(free_theorem_check(ID, ID_TYPE, [inst]), Pass)


@given(
    st.lists(st.tuples(st.sampled_from(NUMERALS), st.sampled_from(NUMERALS)), max_size=4),
    st.tuples(st.sampled_from(NUMERALS), st.sampled_from(NUMERALS)),
    st.tuples(st.sampled_from(NUMERALS), st.sampled_from(NUMERALS)),
)
@settings(max_examples=60)
def test_enlarging_a_relation_keeps_members(pairs, extra, probe):
    small = [RelInstance(NAT, NAT, tuple(pairs))]
    large = [RelInstance(NAT, NAT, (*pairs, extra))]
    if rel_member(X, small, *probe):
        assert rel_member(X, large, *probe)

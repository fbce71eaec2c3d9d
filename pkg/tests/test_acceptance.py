"""The eight acceptance criteria, each timed against its limit.

Run ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines as
they happen; a summary section is printed at the end either way.
"""

import itertools
import random
from collections import Counter

from codes import codes, decode
from golden_cases import CASES, mismatches
from strategies import random_context, random_renaming, random_term, random_type, rng_chooser
from tait.mltt import nbe as mnbe
from tait.mltt import syntax as ms
from tait.mltt.enumerate import Enumerator
from tait.mltt.kernel import EMPTY, check, context, convert_ty, d_canonicity, d_normalize
from tait.stlc.nbe import Verdict, canonicity, embed_nf, normalize, rename_nf
from tait.stlc.oracle import enumerate_terms, oracle_equal, terms_of_size
from tait.stlc.set_model import consistency_check, environments, interp_tm
from tait.stlc.syntax import ANS, NO, UNIT, YES, App, Fun, Lam, Prod, Var, rename
from tait.systemf.church import C0, C1, ID, ID_TYPE, NAT, TWO, X
from tait.systemf.enumerate import long_normal_inhabitants
from tait.systemf.param import Pass, RelInstance, free_theorem_check, rel_member
from tait.systemf.syntax import Arrow, f_normalize
from tait.systemf.syntax import Lam as FLam
from tait.systemf.syntax import Var as FVar

SWEEP_TYPES = (ANS, UNIT, Prod(ANS, ANS), Fun(ANS, ANS), Fun(Fun(ANS, ANS), ANS))
# the closed sweep is the required scope; the open contexts add neutral terms
SWEEP_CONTEXTS = ((), (ANS,), (Fun(ANS, ANS),), (ANS, Fun(Fun(ANS, ANS), ANS)), (Prod(ANS, ANS), UNIT))


def _fresh_enumeration():
    terms_of_size.cache_clear()


def test_criterion_1_consistency(criterion):
    with criterion(1, "consistency", 1.0) as note:
        assert consistency_check()
        assert not oracle_equal((), YES, NO, fuel=100)
        assert normalize((), YES) != normalize((), NO)
        note["detail"] = "yes and no are distinct under every decision procedure"


def test_criterion_2_stlc_canonicity_sweep(criterion):
    _fresh_enumeration()
    with criterion(2, "STLC canonicity sweep, closed Ans terms of size <= 7", 30.0) as note:
        terms = enumerate_terms((), ANS, 7)
        verdicts = Counter(canonicity(t) for t in terms)
        assert set(verdicts) <= {Verdict.IS_YES, Verdict.IS_NO}
        assert sum(verdicts.values()) == len(terms)
        assert 100 <= len(terms) <= 5000
        note["detail"] = f"{len(terms)} terms, {verdicts[Verdict.IS_YES]} yes / {verdicts[Verdict.IS_NO]} no"


def test_criterion_3_normalization_matches_oracle(criterion):
    _fresh_enumeration()
    with criterion(3, "normalize agrees with the rewriting oracle, size <= 4", 120.0) as note:
        pairs = discrepancies = fixpoints = 0
        for ctx in SWEEP_CONTEXTS:
            for ty in SWEEP_TYPES:
                terms = enumerate_terms(ctx, ty, 4)
                nfs = [normalize(ctx, t) for t in terms]
                for t, nf in zip(terms, nfs):
                    fixpoints += 1
                    if normalize(ctx, embed_nf(nf, len(ctx))) != nf:
                        discrepancies += 1
                for (t, nt), (s, ns) in itertools.product(list(zip(terms, nfs)), repeat=2):
                    pairs += 1
                    if (nt == ns) != oracle_equal(ctx, t, s):
                        discrepancies += 1
        assert discrepancies == 0
        note["detail"] = f"{pairs} pairs, {fixpoints} fixpoint checks, 0 discrepancies"


def test_criterion_4_renaming_stability(criterion):
    rng = random.Random(20261018)
    choose = rng_chooser(rng)
    with criterion(4, "renaming stability on 10^4 random pairs", 30.0) as note:
        failures = 0
        for _ in range(10_000):
            ctx = random_context(choose, 4)
            ty = random_type(choose)
            t = random_term(choose, ctx, ty, 4)
            target, r = random_renaming(choose, ctx)
            if normalize(target, rename(t, r)) != rename_nf(normalize(ctx, t), r):
                failures += 1
        assert failures == 0
        note["detail"] = "10000 pairs, 0 failures"


def test_criterion_5_set_model_soundness(criterion):
    _fresh_enumeration()
    with criterion(5, "set-model soundness, size <= 4, plus an incompleteness witness", 60.0) as note:
        checked = violations = 0
        for ctx in SWEEP_CONTEXTS:
            envs = list(environments(ctx))
            for ty in SWEEP_TYPES:
                terms = enumerate_terms(ctx, ty, 4)
                denot = [tuple(interp_tm(ctx, env, t) for env in envs) for t in terms]
                for i, j in itertools.product(range(len(terms)), repeat=2):
                    if oracle_equal(ctx, terms[i], terms[j]):
                        checked += 1
                        if denot[i] != denot[j]:
                            violations += 1
        assert violations == 0
        f = Fun(ANS, ANS)
        thrice = Lam(f, App(Var(0), App(Var(0), App(Var(0), YES))))
        once = Lam(f, App(Var(0), YES))
        assert normalize((), thrice) != normalize((), once)
        assert interp_tm((), (), thrice) == interp_tm((), (), once)
        note["detail"] = f"{checked} oracle-equal pairs agree; f (f (f yes)) vs f yes differ only syntactically"


def test_criterion_6_mltt_universe_and_canonicity(criterion):
    with criterion(6, "MLTT universe equations and dependent canonicity sweep, size <= 7", 60.0) as note:
        n_codes = 0
        for entries, code_vars in (([], ()), ([("A", ms.U())], (0,))):
            ctx = context(entries)
            for code in codes(2, code_vars):
                check(ctx, code, ctx.eval(ms.U()))
                assert convert_ty(ctx, ctx.eval(ms.El(code)), ctx.eval(decode(code)))
                n_codes += 1
        enum = Enumerator()
        ans_terms = enum.terms(EMPTY, EMPTY.eval(ms.Ans()), 7)
        verdicts = Counter(d_canonicity(t) for t in ans_terms)
        assert set(verdicts) <= {Verdict.IS_YES, Verdict.IS_NO}
        el_ans = ms.El(ms.CodeAns())
        el_terms = Enumerator().terms(EMPTY, EMPTY.eval(el_ans), 7)
        for t in el_terms:
            assert d_normalize(EMPTY, t, el_ans) in (mnbe.NfYes(), mnbe.NfNo())
        assert ans_terms and el_terms
        note["detail"] = (
            f"{n_codes} codes; {len(ans_terms)} terms at Ans "
            f"({verdicts[Verdict.IS_YES]} yes / {verdicts[Verdict.IS_NO]} no), {len(el_terms)} at El ans"
        )


def test_criterion_7_system_f_identity_theorem(criterion):
    with criterion(7, "System F identity theorem and relational checks", 30.0) as note:
        inhabitants = long_normal_inhabitants(ID_TYPE, 6)
        assert inhabitants == [ID]
        assert all(f_normalize(t) == ID for t in inhabitants)
        rel = [RelInstance(ID_TYPE, ID_TYPE, ((ID, ID),))]
        assert free_theorem_check(ID, ID_TYPE, [rel]) == Pass(1)
        identity = (FLam(ID_TYPE, FVar(0)), FLam(ID_TYPE, FVar(0)))
        assert free_theorem_check(TWO, NAT, [rel], candidates=[identity]) == Pass(1)
        assert free_theorem_check(ID, ID_TYPE, [[RelInstance(ID_TYPE, ID_TYPE, ())]]) == Pass(1)
        env = [RelInstance(NAT, NAT, ((C0, C1),))]
        assert not rel_member(Arrow(X, X), env, FLam(NAT, FVar(0)), FLam(NAT, C0))
        note["detail"] = "one inhabitant up to size 6; identity and two pass; constant-function pair rejected"


def test_criterion_8_cli_golden_files(criterion):
    with criterion(8, "CLI golden files", 5.0) as note:
        problems = [p for case in CASES for p in mismatches(case)]
        assert problems == []
        note["detail"] = f"{len(CASES)} cases, text and JSON"

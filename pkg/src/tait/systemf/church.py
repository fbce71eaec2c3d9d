"""Church encodings used as closed test data; System F here has no base types."""

from tait.systemf.syntax import App, Arrow, Forall, FTerm, Lam, TVar, TyApp, TyLam, Var

X = TVar(0)

#: forall X. X -> X
ID_TYPE = Forall(Arrow(X, X))
#: /\X. \x:X. x
ID = TyLam(Lam(X, Var(0)))

#: forall X. (X -> X) -> X -> X
NAT = Forall(Arrow(Arrow(X, X), Arrow(X, X)))


def church(n: int) -> FTerm:
    """/\\X. \\f:X->X. \\x:X. f (f ... (f x))"""
    body: FTerm = Var(0)
    for _ in range(n):
        body = App(Var(1), body)
    return TyLam(Lam(Arrow(X, X), Lam(X, body)))


C0 = church(0)
C1 = church(1)
TWO = church(2)

#: \n:Nat. /\X. \f:X->X. \x:X. f (n [X] f x)
SUC = Lam(
    NAT,
    TyLam(Lam(Arrow(X, X), Lam(X, App(Var(1), App(App(TyApp(Var(2), X), Var(1)), Var(0)))))),
)

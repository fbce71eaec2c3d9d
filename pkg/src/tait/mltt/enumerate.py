"""Type-directed enumeration of checkable terms in the dependent fragment.

Every generated term checks against the requested type. When an introduction
form (a lambda or a pair) lands in the head of an eliminator it is wrapped in
an ascription; ascriptions and the types inside them are not counted by
``syntax.size``, the same way binder annotations are free in the simply typed
enumerator.

Eliminators need a type for their hidden part. Those come from small fixed
palettes: non-dependent ``A -> T``, ``T * B`` and ``A * T`` for ``A, B`` in
``Ans, U``, plus the dependent ``(A : U) -> El A -> El A`` and
``(A : U) * El A``, whose results are filtered by conversion with the
target.
"""

from __future__ import annotations

from typing import Iterator

from tait.mltt import nbe
from tait.mltt import syntax as s
from tait.mltt.kernel import Ctx, convert_ty
from tait.mltt.nbe import DValue, VAns, VPi, VSigma, VU, reify_ty

ARG_TYPES: tuple[s.DTerm, ...] = (s.Ans(), s.U())
DEPENDENT_PI: tuple[s.DTerm, ...] = (s.Pi(s.U(), s.Pi(s.El(s.Var(0)), s.El(s.Var(1)))),)
DEPENDENT_SIGMA: tuple[s.DTerm, ...] = (s.Sigma(s.U(), s.El(s.Var(0))),)


class Enumerator:
    def __init__(self, arg_types=ARG_TYPES, dependent_pi=DEPENDENT_PI, dependent_sigma=DEPENDENT_SIGMA):
        self.arg_types = tuple(arg_types)
        self.dependent_pi = tuple(dependent_pi)
        self.dependent_sigma = tuple(dependent_sigma)
        self._memo: dict = {}

    def terms(self, ctx: Ctx, ty: DValue, max_size: int) -> list[s.DTerm]:
        out: list[s.DTerm] = []
        for n in range(1, max_size + 1):
            out.extend(self.of_size(ctx, ty, n))
        return out

    def of_size(self, ctx: Ctx, ty: DValue, n: int) -> tuple[s.DTerm, ...]:
        if n < 1:
            return ()
        d = len(ctx)
        key = (tuple(reify_ty(t, i) for i, t in enumerate(ctx.types)), reify_ty(ty, d), n)
        if key not in self._memo:
            self._memo[key] = tuple(dict.fromkeys(self._generate(ctx, ty, n)))
        return self._memo[key]

    def _type_term(self, ctx: Ctx, ty: DValue) -> s.DTerm:
        d = len(ctx)
        return nbe.embed_nf(reify_ty(ty, d), d)

    def _head(self, ctx: Ctx, t: s.DTerm, ty: DValue) -> s.DTerm:
        """Make ``t`` usable where a type must be inferred."""
        if isinstance(t, (s.Lam, s.Pair)):
            return s.Ann(t, self._type_term(ctx, ty))
        return t

    def _generate(self, ctx: Ctx, ty: DValue, n: int) -> Iterator[s.DTerm]:
        d = len(ctx)
        if n == 1:
            for i in range(d):
                if convert_ty(ctx, ctx.lookup(i), ty):
                    yield s.Var(i)
            if isinstance(ty, VAns):
                yield s.Yes()
                yield s.No()
            if isinstance(ty, VU):
                yield s.CodeAns()
            return
        yield from self._introductions(ctx, ty, n)
        yield from self._eliminations(ctx, ty, n)

    def _introductions(self, ctx, ty, n):
        d = len(ctx)
        match ty:
            case VPi(dom, cod):
                inner = ctx.extend(dom)
                for body in self.of_size(inner, cod(inner.env[-1], d + 1), n - 1):
                    yield s.Lam(body)
            case VSigma(dom, cod):
                for k in range(1, n - 1):
                    for a in self.of_size(ctx, dom, k):
                        for b in self.of_size(ctx, cod(ctx.eval(a), d), n - 1 - k):
                            yield s.Pair(a, b)
            case VU():
                for k in range(1, n - 1):
                    for a in self.of_size(ctx, VU(), k):
                        inner = ctx.extend(nbe.el(ctx.eval(a)))
                        for b in self.of_size(inner, VU(), n - 1 - k):
                            yield s.CodePi(a, b)
                            yield s.CodeSigma(a, b)

    def _eliminations(self, ctx, ty, n):
        d = len(ctx)
        target = self._type_term(ctx, ty)
        # candidate types for the head, as closed-over-ctx terms
        pis = [s.arrow(a, target) for a in self.arg_types] + list(self.dependent_pi)
        fst_sigmas = [s.product(target, b) for b in self.arg_types]
        snd_sigmas = [s.product(a, target) for a in self.arg_types] + list(self.dependent_sigma)

        for sig in fst_sigmas:
            sv = ctx.eval(sig)
            for p in self.of_size(ctx, sv, n - 1):
                yield s.Fst(self._head(ctx, p, sv))
        for sig in snd_sigmas:
            sv = ctx.eval(sig)
            for p in self.of_size(ctx, sv, n - 1):
                if convert_ty(ctx, sv.codomain(nbe.fst(ctx.eval(p)), d), ty):
                    yield s.Snd(self._head(ctx, p, sv))
        for pi in pis:
            pv = ctx.eval(pi)
            for k in range(1, n - 1):
                fs = self.of_size(ctx, pv, k)
                if not fs:
                    continue
                for a in self.of_size(ctx, pv.domain, n - 1 - k):
                    if not convert_ty(ctx, pv.codomain(ctx.eval(a), d), ty):
                        continue
                    for f in fs:
                        yield s.App(self._head(ctx, f, pv), a)


def enumerate_dterms(ctx: Ctx, ty: DValue, max_size: int) -> list[s.DTerm]:
    return Enumerator().terms(ctx, ty, max_size)

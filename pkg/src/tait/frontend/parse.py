"""Surface syntax for the three calculi.

One lexer is shared; each calculus has its own small recursive-descent
grammar on top of it. Names are resolved to de Bruijn indices while parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from tait.errors import KernelError
from tait.mltt import syntax as ms
from tait.stlc import syntax as ss
from tait.systemf import syntax as fs


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"

    def as_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "line": self.line, "column": self.column}


class ParseError(KernelError):
    exit_code = 2
    kind = "parse"

    def __init__(self, span: SourceSpan, expected: Sequence[str], found: str):
        exp = ", ".join(sorted(set(expected)))
        super().__init__(f"{span}: expected {exp}; found {found}")
        self.span = span
        self.expected = tuple(sorted(set(expected)))
        self.found = found


class UnboundName(KernelError):
    exit_code = 2
    kind = "parse"

    def __init__(self, span: SourceSpan, name: str):
        super().__init__(f"{span}: unbound name {name!r}")
        self.span = span
        self.name = name


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "sym" or "eof"
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|--[^\n]*)
  | (?P<sym>/\\|->|→|[\\λΛ∀×.:,()\[\]*|=])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)
_UNICODE = {"λ": "\\", "Λ": "/\\", "∀": "forall", "→": "->", "×": "*"}


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            span = SourceSpan(pos, pos + 1, line, pos - line_start + 1)
            raise ParseError(span, ["a token"], repr(src[pos]))
        text = m.group()
        if m.lastgroup != "ws":
            span = SourceSpan(pos, m.end(), line, pos - line_start + 1)
            text = _UNICODE.get(text, text)
            kind = "ident" if text == "forall" else m.lastgroup
            tokens.append(Token(kind, text, span))
        for k, ch in enumerate(m.group()):
            if ch == "\n":
                line, line_start = line + 1, pos + k + 1
        pos = m.end()
    tokens.append(Token("eof", "", SourceSpan(pos, pos, line, pos - line_start + 1)))
    return tokens


KEYWORDS = {"yes", "no", "fst", "snd", "Ans", "Unit", "U", "El", "ans", "pi", "sigma", "forall"}


class Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0
        self.furthest = 0
        self.expected: set[str] = set()

    # -- token plumbing

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def at(self, *texts: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text in texts

    def note(self, *what: str) -> None:
        if self.pos > self.furthest:
            self.furthest, self.expected = self.pos, set()
        if self.pos == self.furthest:
            self.expected.update(what)

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            tok = self.tok
            self.pos += 1
            return tok
        self.note(repr(text))
        return None

    def expect(self, text: str) -> Token:
        tok = self.accept(text)
        if tok is None:
            self.fail()
        return tok

    def ident(self) -> Token:
        if self.tok.kind == "ident" and self.tok.text not in KEYWORDS:
            tok = self.tok
            self.pos += 1
            return tok
        self.note("an identifier")
        self.fail()

    def fail(self):
        tok = self.tokens[self.furthest]
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(tok.span, self.expected or {"something else"}, found)

    def attempt(self, fn, *args):
        """Run ``fn``; on failure rewind and return None."""
        saved = self.pos, self.furthest, set(self.expected)
        try:
            return fn(*args)
        except ParseError:
            self.pos, self.furthest, self.expected = saved
            return None

    def finish(self) -> None:
        if self.tok.kind != "eof":
            self.note("end of input")
            self.fail()

    @staticmethod
    def resolve(scope: Sequence[str], tok: Token) -> int:
        for i, name in enumerate(reversed(scope)):
            if name == tok.text:
                return i
        raise UnboundName(tok.span, tok.text)


# ---------------------------------------------------------------------------
# STLC


class StlcParser(Parser):
    def type(self) -> ss.SimpleType:
        left = self.prod_type()
        if self.accept("->"):
            return ss.Fun(left, self.type())
        return left

    def prod_type(self) -> ss.SimpleType:
        left = self.type_atom()
        if self.accept("*"):
            return ss.Prod(left, self.prod_type())
        return left

    def type_atom(self) -> ss.SimpleType:
        if self.accept("Ans"):
            return ss.ANS
        if self.accept("Unit"):
            return ss.UNIT
        self.expect("(")
        ty = self.type()
        self.expect(")")
        return ty

    def term(self, scope: list[str]) -> ss.SimpleTerm:
        if self.at("\\"):
            return self.lam(scope)
        t = self.prefix(scope)
        while True:
            if self.at("\\"):
                return ss.App(t, self.lam(scope))
            if not self.starts_atom():
                return t
            t = ss.App(t, self.prefix(scope))

    def lam(self, scope):
        self.expect("\\")
        name = self.ident().text
        self.expect(":")
        ty = self.type()
        self.expect(".")
        return ss.Lam(ty, self.term([*scope, name]))

    def starts_atom(self) -> bool:
        if self.tok.kind == "ident" and self.tok.text not in KEYWORDS - {"yes", "no", "fst", "snd"}:
            return True
        return self.at("(")

    def prefix(self, scope):
        if self.accept("fst"):
            return ss.Fst(self.atom(scope))
        if self.accept("snd"):
            return ss.Snd(self.atom(scope))
        return self.atom(scope)

    def atom(self, scope):
        if self.accept("yes"):
            return ss.YES
        if self.accept("no"):
            return ss.NO
        if self.accept("("):
            if self.accept(")"):
                return ss.STAR
            first = self.term(scope)
            if self.accept(","):
                second = self.term(scope)
                self.expect(")")
                return ss.Pair(first, second)
            self.expect(")")
            return first
        self.note("'yes'", "'no'", "'fst'", "'snd'", "'\\'")
        tok = self.ident()
        return ss.Var(self.resolve(scope, tok))


# ---------------------------------------------------------------------------
# MLTT


class MlttParser(Parser):
    """Expression grammar, loosest first::

        expr  := '\\' binders '.' expr | arrow [':' expr]
        arrow := '(' x ':' expr ')' '->' arrow | prod ['->' arrow]
        prod  := '(' x ':' expr ')' '*' prod  | app ['*' prod]
        app   := head atom*     where head may be fst/snd/El/pi/sigma
    """

    def expr(self, scope: list[str]) -> ms.DTerm:
        if self.at("\\"):
            return self.lam(scope)
        t = self.arrow(scope)
        if self.accept(":"):
            return ms.Ann(t, self.expr(scope))
        return t

    def lam(self, scope):
        self.expect("\\")
        names = []
        while True:
            if self.accept("("):
                names.append(self.binder_name())
                self.expect(":")
                self.expr([*scope, *names[:-1]])
                self.expect(")")
            elif self.tok.kind == "ident" and self.tok.text not in KEYWORDS:
                names.append(self.binder_name())
            else:
                break
        if not names:
            self.note("a binder")
            self.fail()
        if len(names) == 1 and self.accept(":"):
            self.arrow(scope)
        self.expect(".")
        body = self.expr([*scope, *names])
        for _ in names:
            body = ms.Lam(body)
        return body

    def binder_name(self) -> str:
        return self.ident().text

    def telescope(self, scope, op: str):
        self.expect("(")
        name = self.binder_name()
        self.expect(":")
        dom = self.expr(scope)
        self.expect(")")
        self.expect(op)
        return name, dom

    def arrow(self, scope):
        bound = self.attempt(self.telescope, scope, "->")
        if bound is not None:
            name, dom = bound
            return ms.Pi(dom, self.arrow([*scope, name]))
        left = self.prod(scope)
        if self.accept("->"):
            return ms.Pi(left, self.arrow([*scope, "_"]))
        return left

    def prod(self, scope):
        bound = self.attempt(self.telescope, scope, "*")
        if bound is not None:
            name, dom = bound
            return ms.Sigma(dom, self.prod([*scope, name]))
        left = self.app(scope)
        if self.accept("*"):
            return ms.Sigma(left, self.prod([*scope, "_"]))
        return left

    def starts_atom(self) -> bool:
        if self.tok.kind == "ident" and self.tok.text in {"yes", "no", "ans", "Ans", "U"}:
            return True
        return (self.tok.kind == "ident" and self.tok.text not in KEYWORDS) or self.at("(")

    def app(self, scope):
        if self.accept("fst"):
            t = ms.Fst(self.atom(scope))
        elif self.accept("snd"):
            t = ms.Snd(self.atom(scope))
        elif self.accept("El"):
            t = ms.El(self.atom(scope))
        elif self.at("pi", "sigma"):
            ctor = ms.CodePi if self.tok.text == "pi" else ms.CodeSigma
            self.pos += 1
            dom = self.atom(scope)
            fam = self.lam(scope) if self.at("\\") else self.atom(scope)
            t = ctor(dom, _family_body(fam))
        else:
            t = self.atom(scope)
        while True:
            if self.at("\\"):
                return ms.App(t, self.lam(scope))
            if not self.starts_atom():
                return t
            t = ms.App(t, self.atom(scope))

    def atom(self, scope):
        for word, node in (("yes", ms.Yes()), ("no", ms.No()), ("ans", ms.CodeAns()), ("Ans", ms.Ans()), ("U", ms.U())):
            if self.accept(word):
                return node
        if self.accept("("):
            first = self.expr(scope)
            if self.accept(","):
                second = self.expr(scope)
                self.expect(")")
                return ms.Pair(first, second)
            self.expect(")")
            return first
        self.note("'\\'", "'fst'", "'snd'", "'El'", "'pi'", "'sigma'")
        tok = self.ident()
        return ms.Var(self.resolve(scope, tok))


def _family_body(fam: ms.DTerm) -> ms.DTerm:
    """The second argument of ``pi``/``sigma`` as a binder body."""
    if isinstance(fam, ms.Lam):
        return fam.body
    return ms.App(ms.shift(fam, 1), ms.Var(0))


# ---------------------------------------------------------------------------
# System F


class SysfParser(Parser):
    def __init__(self, src: str, free_types: bool = False):
        super().__init__(src)
        self.free_types = free_types
        self.free_names: list[str] = []

    def type(self, tscope: list[str]) -> fs.FType:
        if self.accept("forall"):
            name = self.ident().text
            self.expect(".")
            return fs.Forall(self.type([*tscope, name]))
        left = self.type_atom(tscope)
        if self.accept("->"):
            return fs.Arrow(left, self.type(tscope))
        return left

    def type_atom(self, tscope):
        if self.accept("("):
            ty = self.type(tscope)
            self.expect(")")
            return ty
        self.note("'forall'")
        tok = self.ident()
        try:
            return fs.TVar(self.resolve(tscope, tok))
        except UnboundName:
            if not self.free_types:
                raise
        # first pass only collects names; parse_type re-parses with them bound
        if tok.text not in self.free_names:
            self.free_names.append(tok.text)
        return fs.TVar(0)

    def term(self, tscope: list[str], scope: list[str]) -> fs.FTerm:
        if self.at("\\", "/\\"):
            return self.binder(tscope, scope)
        t = self.atom(tscope, scope)
        while True:
            if self.at("\\", "/\\"):
                return fs.App(t, self.binder(tscope, scope))
            if self.accept("["):
                ty = self.type(tscope)
                self.expect("]")
                t = fs.TyApp(t, ty)
            elif (self.tok.kind == "ident" and self.tok.text not in KEYWORDS) or self.at("("):
                t = fs.App(t, self.atom(tscope, scope))
            else:
                return t

    def binder(self, tscope, scope):
        if self.accept("/\\"):
            name = self.ident().text
            self.expect(".")
            return fs.TyLam(self.term([*tscope, name], scope))
        self.expect("\\")
        name = self.ident().text
        self.expect(":")
        ty = self.type(tscope)
        self.expect(".")
        return fs.Lam(ty, self.term(tscope, [*scope, name]))

    def atom(self, tscope, scope):
        if self.accept("("):
            t = self.term(tscope, scope)
            self.expect(")")
            return t
        self.note("'\\'", "'/\\'")
        tok = self.ident()
        return fs.Var(self.resolve(scope, tok))


# ---------------------------------------------------------------------------
# Entry points

CALCULI = ("stlc", "mltt", "sysf")


def parse_term(src: str, calculus: str = "stlc", names: Sequence[str] = (), type_names: Sequence[str] = ()):
    """Parse a closed (or ``names``-scoped) term of the given calculus."""
    match calculus:
        case "stlc":
            p = StlcParser(src)
            t = p.term(list(names))
        case "mltt":
            p = MlttParser(src)
            t = p.expr(list(names))
        case "sysf":
            p = SysfParser(src)
            t = p.term(list(type_names), list(names))
        case _:
            raise ValueError(f"unknown calculus {calculus!r}")
    p.finish()
    return t


def parse_type(src: str, calculus: str = "stlc", names: Sequence[str] = (), free_types: bool = False):
    """Parse a type.

    For ``mltt`` a type is an expression and ``names`` scopes its variables.
    For ``sysf`` ``names`` are type variables in scope; with ``free_types``
    unknown type names become free variables instead of errors, and the
    returned value is ``(type, free_names)``.
    """
    match calculus:
        case "stlc":
            p = StlcParser(src)
            ty = p.type()
        case "mltt":
            p = MlttParser(src)
            ty = p.expr(list(names))
        case "sysf":
            p = SysfParser(src, free_types)
            ty = p.type(list(names))
            p.finish()
            if not free_types:
                return ty
            free = list(p.free_names)
            return parse_type(src, "sysf", [*free, *names]), free
        case _:
            raise ValueError(f"unknown calculus {calculus!r}")
    p.finish()
    return ty


def parse_context(src: str, calculus: str = "stlc") -> list[tuple[str, object]]:
    """Parse ``x : T, y : S`` into (name, type) entries, outermost first.

    Later types may mention earlier names in ``mltt``.
    """
    entries: list[tuple[str, object]] = []
    if not src.strip():
        return entries
    p = {"stlc": StlcParser, "mltt": MlttParser, "sysf": SysfParser}[calculus](src)
    while True:
        name = p.ident().text
        p.expect(":")
        match calculus:
            case "stlc":
                ty = p.type()
            case "mltt":
                ty = p.arrow([n for n, _ in entries])
            case _:
                ty = p.type([])
        entries.append((name, ty))
        if not p.accept(","):
            break
    p.finish()
    return entries

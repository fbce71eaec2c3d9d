"""Plain-text relation instances for the System F free-theorem checker.

A file describes one instantiation: one section per leading ``forall``,
outermost first, separated by ``---`` lines::

    # X := forall Y. Y -> Y, related by the identity pair
    left: forall Y. Y -> Y
    right: forall Y. Y -> Y
    pair: /\\Y. \\y:Y. y | /\\Y. \\y:Y. y
    ---
    ...

``candidate: <term> | <term>`` lines (anywhere) add closed function pairs to
try as arguments at function types.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from tait.frontend.parse import ParseError, SourceSpan, UnboundName, parse_term, parse_type
from tait.systemf.param import RelInstance


@dataclass
class RelFile:
    instances: list[RelInstance] = field(default_factory=list)
    candidates: list[tuple] = field(default_factory=list)


def _relocate(err, offset: int, line: int, column: int):
    span = err.span
    moved = SourceSpan(span.start + offset, span.end + offset, line, span.column + column - 1)
    if isinstance(err, ParseError):
        return ParseError(moved, err.expected, err.found)
    return UnboundName(moved, err.name)


def parse_relfile(text: str) -> RelFile:
    out = RelFile()
    sections: list[dict] = [{"pairs": []}]
    offset = 0
    for lineno, raw in enumerate(text.splitlines(keepends=True), start=1):
        line = raw.rstrip("\n")
        stripped = line.strip()
        line_offset = offset
        offset += len(raw)
        if not stripped or stripped.startswith("#"):
            continue
        if stripped == "---":
            sections.append({"pairs": []})
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        start = len(key) + len(line) - len(line.lstrip()) + 1 if sep else 0
        column = start + 1 + (len(value) - len(value.lstrip()))
        value = value.strip()
        here = line_offset + column - 1

        def parse(fn, src, *args, extra=0):
            try:
                return fn(src, "sysf", *args)
            except (ParseError, UnboundName) as e:
                raise _relocate(e, here + extra, lineno, column + extra) from None

        if not sep or key not in {"left", "right", "pair", "candidate"}:
            span = SourceSpan(line_offset, line_offset + len(line), lineno, 1)
            raise ParseError(span, ["'left:'", "'right:'", "'pair:'", "'candidate:'", "'---'"], repr(stripped))
        if key in ("left", "right"):
            sections[-1][key] = parse(parse_type, value)
            continue
        l_src, bar, r_src = value.partition("|")
        if not bar:
            span = SourceSpan(here + len(value), here + len(value), lineno, column + len(value))
            raise ParseError(span, ["'|'"], "end of line")
        pair = (parse(parse_term, l_src.strip()), parse(parse_term, r_src.strip(), extra=len(l_src) + 1))
        if key == "pair":
            sections[-1]["pairs"].append(pair)
        else:
            out.candidates.append(pair)
    for sec in sections:
        if "left" not in sec and "right" not in sec and not sec["pairs"]:
            continue
        if "left" not in sec or "right" not in sec:
            span = SourceSpan(0, 0, 1, 1)
            raise ParseError(span, ["'left:' and 'right:' in every section"], "an incomplete section")
        out.instances.append(RelInstance(sec["left"], sec["right"], tuple(sec["pairs"])))
    return out

"""Golden-file cases for the command-line driver."""

from __future__ import annotations

import io
import json
import os
from contextlib import contextmanager
from pathlib import Path

from tait.frontend.cli import cli_run

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))


@contextmanager
def _in_golden_dir():
    old = os.getcwd()
    os.chdir(GOLDEN)
    try:
        yield
    finally:
        os.chdir(old)


def run(argv, stdin_text: str = "") -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with _in_golden_dir():
        code = cli_run(list(argv), out, err, io.StringIO(stdin_text))
    return code, out.getvalue() + err.getvalue()


def mismatches(case: dict) -> list[str]:
    """Differences between a live run of ``case`` and its pinned outputs."""
    problems = []
    for fmt, ext in (("text", "txt"), ("json", "json")):
        code, output = run([*case["argv"], "--format", fmt])
        expected = (GOLDEN / f"{case['name']}.{ext}").read_text(encoding="utf-8")
        if code != case["exit"]:
            problems.append(f"{case['name']} [{fmt}]: exit {code}, expected {case['exit']}")
        if output != expected:
            problems.append(f"{case['name']} [{fmt}]: output differs:\n{output}\n--- expected ---\n{expected}")
    return problems

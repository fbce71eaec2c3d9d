import json
import subprocess
import sys

import pytest

from golden_cases import CASES, mismatches, run

KEYS = {"status", "command", "result", "normal_form", "verdict", "error"}


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    assert mismatches(case) == []


def test_every_subcommand_has_a_golden_case():
    commands = {c["argv"][0] for c in CASES}
    assert commands == {"check", "normalize", "canonicity", "consistency", "oracle-eq", "enumerate", "free-theorem"}


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_json_payload_shape(case):
    _, out = run([*case["argv"], "--format", "json"])
    payload = json.loads(out)
    assert set(payload) == KEYS
    assert payload["command"] == case["argv"][0]
    assert (payload["error"] is None) == (payload["status"] == "ok")


def test_oracle_eq_false_payload():
    code, out = run(["oracle-eq", "yes", "no", "--format", "json"])
    assert code == 1
    assert json.loads(out)["result"] is False


def test_term_from_stdin():
    code, out = run(["normalize", "-"], stdin_text="(\\x:Ans. x) yes")
    assert (code, out) == (0, "yes\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["canonicity", "--calculus", "sysf", "x"],
        ["enumerate"],
        ["enumerate", "--type", "Ans", "--max-size", "0"],
        ["consistency", "--calculus", "mltt"],
        ["check", "--calculus", "lisp", "yes"],
        ["free-theorem", "--calculus", "sysf", "--type", "forall X. X -> X", "--rel", "missing.rel", "/\\X. \\x:X. x"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, _ = run(argv)
    assert code == 2


def test_usage_error_json_has_kind():
    code, out = run(["enumerate", "--format", "json"])
    assert code == 2
    assert json.loads(out)["error"]["kind"] == "usage"


def test_relfile_parse_error_points_at_file(tmp_path):
    bad = tmp_path / "bad.rel"
    bad.write_text("left: forall Y. Y -> Y\nright: Y ->\n", encoding="utf-8")
    code, out = run(["free-theorem", "--calculus", "sysf", "--type", "forall X. X -> X", "--rel", str(bad), "/\\X. \\x:X. x", "--format", "json"])
    assert code == 2
    assert json.loads(out)["error"]["span"]["line"] == 2


def test_mltt_canonicity_with_ascription():
    code, out = run(["canonicity", "--calculus", "mltt", "snd ((ans, yes) : (A : U) * El A)"])
    assert (code, out) == (0, "yes\n")
    code, out = run(["canonicity", "--calculus", "mltt", "(\\x. x) no", "--type", "El ans"])
    assert code == 3  # an unannotated lambda cannot be applied
    code, out = run(["canonicity", "--calculus", "mltt", "no", "--type", "El ans"])
    assert (code, out) == (0, "no\n")


def test_mltt_enumerate():
    code, out = run(["enumerate", "--calculus", "mltt", "--type", "U", "--max-size", "3"])
    assert code == 0
    assert out.splitlines() == ["ans", "pi ans (\\x. ans)", "sigma ans (\\x. ans)"]


def test_module_entry_point_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "tait", "oracle-eq", "yes", "no"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 1
    assert proc.stdout == "false\n"


def test_normalize_example():
    assert run(["normalize", "--calculus", "stlc", "(\\x:Ans. x) yes"]) == (0, "yes\n")


def test_canonicity_example():
    code, out = run(["canonicity", "fst (yes, no)", "--format", "json"])
    assert code == 0
    assert json.loads(out)["verdict"] == "yes"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "yes no"],
        ["normalize", "fst yes"],
        ["oracle-eq", "yes", "()"],
        ["check", "--calculus", "mltt", "fst yes"],
        ["normalize", "--calculus", "sysf", "--fuel", "0", "(/\\X. \\x:X. x) [forall X. X -> X]"],
    ],
)
def test_errors_carry_spans(argv):
    code, out = run([*argv, "--format", "json"])
    assert code in (3, 4)
    span = json.loads(out)["error"]["span"]
    assert span is not None and span["start"] <= span["end"]


def test_oracle_eq_blames_the_left_side():
    _, out = run(["oracle-eq", "yes yes", "no", "--format", "json"])
    assert json.loads(out)["error"]["span"]["end"] == len("yes yes")


@pytest.mark.parametrize("case", CASES[:4], ids=[c["name"] for c in CASES[:4]])
def test_json_output_is_deterministic(case):
    argv = [*case["argv"], "--format", "json"]
    assert run(argv) == run(argv)

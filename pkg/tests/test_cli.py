"""CLI grammar, JSON/LaTeX emission, exit codes, and the verify runner."""

import contextlib
import io
import json
import shutil
import subprocess
import sys

import pytest

from schurdiv import ParseError
from schurdiv.cli import (
    main,
    parse_colrange,
    parse_diff_argument,
    parse_index_vector,
    parse_laurent_json,
    parse_rational_list,
)


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


# ------------------------------------------------------------ grammar


def test_parse_index_vector():
    assert parse_index_vector("[-4,-3,-2,1,3,4]") == (-4, -3, -2, 1, 3, 4)
    assert parse_index_vector("[0]") == (0,)
    assert parse_index_vector("[1, 2,3]") == (1, 2, 3)
    assert parse_index_vector(" [ 1 , -2 ] ") == (1, -2)
    assert parse_index_vector("[]") == ()


@pytest.mark.parametrize(
    "text,offset",
    [("[1,,2]", 3), ("1,2", 0), ("[1 2]", 3), ("[1,2] junk", 6), ("[1,2", 4)],
)
def test_parse_index_vector_rejects(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_index_vector(text)
    assert exc.value.offset == offset


def test_parse_rational_list():
    A = parse_rational_list("1,2,5/3,-4")
    assert [str(a) for a in A] == ["1", "2", "5/3", "-4"]
    assert len(parse_rational_list("")) == 0
    with pytest.raises(ParseError):
        parse_rational_list("1,1")
    with pytest.raises(ParseError):
        parse_rational_list("2/0")
    with pytest.raises(ParseError):
        parse_rational_list("1,,2")
    # equality after reduction counts as a duplicate
    with pytest.raises(ParseError):
        parse_rational_list("1/2,2/4")


def test_parse_diff_argument():
    arg = parse_diff_argument("(1,2) - (x)")
    assert str(arg) == "(1,2) - (x)"
    assert str(parse_diff_argument("(1,2)")) == "(1,2)"
    assert str(parse_diff_argument("() - (3)")) == "() - (3)"
    assert str(parse_diff_argument("(x^-1,1/2)")) == "(x^-1,1/2)"
    for bad in ["1,2", "(1,2) + (3)", "(1,2) - (3) x", "(y)"]:
        with pytest.raises(ParseError):
            parse_diff_argument(bad)


def test_parse_laurent_json():
    p = parse_laurent_json('{"-1":"3/2","1":"-1/2"}')
    assert p.to_json_obj() == {"-1": "3/2", "1": "-1/2"}
    assert parse_laurent_json("{}").is_zero
    for bad in ["[1,2]", '{"a":"1"}', '{"1":2}', '{"1":"2/0"}', "{"]:
        with pytest.raises(ParseError):
            parse_laurent_json(bad)


def test_parse_colrange():
    cr = parse_colrange("-2..3")
    assert (cr.kmin, cr.kmax) == (-2, 3)
    for bad in ["3..-2", "1..", "1-2", "a..b"]:
        with pytest.raises(ParseError):
            parse_colrange(bad)


# ------------------------------------------------------------ subcommands


def test_schur_json_document():
    code, out, _ = run_cli(["schur", "--J", "[1,1]", "--A", "1,2"])
    assert code == 0
    assert json.loads(out) == {
        "command": "schur",
        "J": [1, 1],
        "A": ["1", "2"],
        "value": "2",
    }


def test_schur_latex_golden():
    code, out, _ = run_cli(["schur", "--J", "[4,-2]", "--A", "1,2", "--latex"])
    assert code == 0
    assert out.strip() == (
        "S_{(4,-2)}(1,2) = \\frac{\\begin{vmatrix} 1 & 16 \\\\ 1 & \\frac{1}{2} "
        "\\end{vmatrix}}{1} = -\\frac{31}{2}"
    )


def test_multischur_json_and_latex():
    argv = ["multischur", "--J", "[1,2]", "--cols", "(1,2) - (x);(1,2)"]
    code, out, _ = run_cli(argv)
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == {"0": "6", "1": "-7"}
    assert doc["columns"] == ["(1,2) - (x)", "(1,2)"]
    code, out, _ = run_cli(argv + ["--latex"])
    assert out.strip() == "\\begin{vmatrix} -x + 3 & 15 \\\\ 1 & 7 \\end{vmatrix} = -7x + 6"


def test_remainder_power_and_laurent():
    code, out, _ = run_cli(["remainder", "--power", "3", "--A", "1,2"])
    assert code == 0
    assert json.loads(out)["remainder"] == {"0": "-6", "1": "7"}
    # arbitrary Laurent input goes through the same closed forms termwise
    code, out, _ = run_cli(["remainder", "--laurent", '{"3":"1","-1":"1"}', "--A", "1,2"])
    doc = json.loads(out)
    assert doc["input"]["laurent"] == {"-1": "1", "3": "1"}  # canonical key order
    assert doc["remainder"] == {"0": "-9/2", "1": "13/2"}
    code, out, _ = run_cli(["remainder", "--power=-1", "--A", "1,2", "--latex"])
    assert out.strip() == "r(x) = -\\frac{1}{2}x + \\frac{3}{2}"


def test_remainder_round_trip_is_byte_stable():
    code, out, _ = run_cli(["remainder", "--laurent", '{"1":"-1/2", "0":"3/2"}', "--A", "1,2"])
    emitted = json.dumps(json.loads(out)["remainder"])
    code, out2, _ = run_cli(["remainder", "--laurent", emitted, "--A", "1,2"])
    assert json.dumps(json.loads(out2)["input"]["laurent"]) == emitted


def test_euclid_document():
    code, out, _ = run_cli(["euclid", "--m", "3", "--A", "1,2", "--B", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["dividend"] == {"2": "-3", "3": "1"}
    assert doc["remainders"] == [{"1": "-2"}, {"0": "2"}, {}]
    assert [(row["r"], row["scalar"], row["proportional"]) for row in doc["table"]] == [
        (1, "-1", True),
        (2, "4", True),
    ]


def test_companion_document_and_latex():
    code, out, _ = run_cli(["companion", "--A", "1,2", "--cols=-1..2"])
    assert json.loads(out)["matrix"] == [["3/2", "1", "0", "-2"], ["-1/2", "0", "1", "3"]]
    code, out, _ = run_cli(["companion", "--A", "1,2", "--cols", "0..1", "--latex"])
    assert out.strip() == (
        "\\mathcal{C}_{[0..1]}(1,2) = \\begin{pmatrix} 1 & 0 \\\\ 0 & 1 \\end{pmatrix}"
    )


def test_giambelli_routes():
    code, out, _ = run_cli(["giambelli", "--J", "[1,1]", "--A", "1,2"])
    doc = json.loads(out)
    assert doc["route"] == "minor"
    assert doc["matrix"] == [["0", "-2"], ["1", "3"]]
    assert doc["value"] == "2"

    code, out, _ = run_cli(
        ["giambelli", "--J=[-4,-3,-2,1,3,4]", "--A", "1,2,3,5,7,11", "--explain"]
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["route"] == "block"
    assert doc["labels"][0] == ["S_{12}(A^∨)", "S_{14}(A^∨)", "S_{1^4,4}(A)", "S_{1^4,2}(A)"]
    assert doc["labels"][3][2:] == ["S_{4}(A)", "S_{2}(A)"]
    assert doc["hooks"] == {
        "negative": {"alpha": [3, 1], "beta": [2, 1]},
        "positive": {"alpha": [3, 1], "beta": [2, 0]},
    }
    minor = run_cli(["giambelli", "--J=[-4,-3,-2,1,3,4]", "--A", "1,2,3,5,7,11"])
    assert json.loads(minor[1])["value"] == doc["value"]


def test_giambelli_block_latex():
    code, out, _ = run_cli(["giambelli", "--J=[-1,0]", "--A", "1,2", "--block", "--latex"])
    assert code == 0
    assert out.strip() == (
        "S_{(-1,0)}(1,2) = \\begin{vmatrix} S_{1}(A^{\\vee}) \\end{vmatrix} = \\frac{3}{2}"
    )


def test_houmu_document():
    code, out, _ = run_cli(
        ["houmu", "--A", "1,2", "--J", "[1,1]", "--seq", "1,2,4,8", "--seq", "1,1,1,1"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == "2" and doc["bialternant"] == "2" and doc["agrees"] is True


# ------------------------------------------------------------ exit codes


@pytest.mark.parametrize(
    "argv,code",
    [
        (["schur", "--J", "[1,,2]", "--A", "1,2"], 2),
        (["schur", "--J", "[1,1]", "--A", "1,1"], 2),
        (["schur", "--J", "[1,1]", "--A", "1,2/0"], 2),
        (["schur", "--J", "[1]", "--A", "1,2"], 3),
        (["remainder", "--power=-1", "--A", "0,1"], 3),
        (["remainder", "--power", "1", "--laurent", "{}", "--A", "1"], 2),
        (["houmu", "--A", "1,2", "--J", "[0,0]", "--seq", "1,1,1,1", "--seq", "2,2,2,2"], 3),
        (["houmu", "--A", "1,2", "--J", "[0,0]", "--seq", "1,1,1,1", "--seq", "1,1,1,1", "--latex"], 2),
        (["giambelli", "--J", "[2,1]", "--A", "1,2", "--block"], 3),
        (["verify", "--suites", "nope"], 2),
        (["verify", "--trials", "0"], 2),
        (["companion", "--A", "1,2", "--cols", "5..1"], 2),
        (["nosuch"], 2),
        ([], 2),
        (["--help"], 0),
    ],
)
def test_exit_codes(argv, code):
    got, _, _ = run_cli(argv)
    assert got == code


# ------------------------------------------------------------ verify runner


def test_verify_single_suite_deterministic():
    argv = ["verify", "--suites", "schur", "--trials", "25", "--seed", "4"]
    code1, out1, err1 = run_cli(argv)
    code2, out2, err2 = run_cli(argv)
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reports for a fixed seed
    doc = json.loads(out1)
    assert [s["name"] for s in doc["suites"]] == ["schur"]
    assert doc["ok"] is True and doc["failures_total"] == 0
    assert "wall" not in out1 and err1.startswith("wall time:")


def test_verify_suite_selection_is_order_independent():
    both = run_cli(["verify", "--suites", "schur,laurent", "--trials", "10"])
    flipped = run_cli(["verify", "--suites", "laurent,schur", "--trials", "10"])
    a = {s["name"]: s for s in json.loads(both[1])["suites"]}
    b = {s["name"]: s for s in json.loads(flipped[1])["suites"]}
    assert a == b


def test_console_entry_points():
    assert shutil.which("schurdiv") is not None
    proc = subprocess.run(
        [sys.executable, "-m", "schurdiv.cli", "schur", "--J", "[1,1]", "--A", "1,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "2"

import io
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from fibq.alphabet import normalize_text
from fibq.cli import format_codeword, main, parse_codeword
from fibq.codec import encode
from fibq.errors import CodewordFormatError
from oracles import first_zero_b2_block

EXAMPLE_1_FILE = "FIBQ1 b=4\n-129 17 12 3\n44 11 4 8\n0 15 15 3\n45 18 3 3\n"
EXAMPLE_2_FILE = "FIBQ1 b=1\n84 15 3 10\n"


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("text, body", [("MATH", EXAMPLE_2_FILE), ("NIHAL HELLO", EXAMPLE_1_FILE)])
def test_encode_golden(text, body):
    assert run(["encode"], text + "\n") == (0, body, "")


@pytest.mark.parametrize("body, text", [(EXAMPLE_2_FILE, "MATH\n"), (EXAMPLE_1_FILE, "NIHAL HELLO\n")])
def test_decode_golden(body, text):
    assert run(["decode"], body) == (0, text, "")


def test_encode_empty():
    code, out, err = run(["encode"], "")
    assert code != 0 and out == ""
    assert "empty message" in err


def test_encode_reports_position_and_block():
    code, _, err = run(["encode"], "HI THERE!")
    assert code == 1 and "'!' at position 8" in err
    code, _, err = run(["encode"], "AY")
    assert code == 1 and "block 0" in err


def test_decode_degenerate_row():
    code, out, err = run(["decode"], "FIBQ1 b=1\n84 15 0 10\n")
    assert code == 1 and out == ""
    assert "row 0: degenerate equation" in err


def test_decode_corrupted_row():
    code, _, err = run(["decode"], "FIBQ1 b=1\n85 15 3 10\n")
    assert code == 1 and "row 0: non-integer solution" in err


def test_files_round_trip(tmp_path):
    for text in ("MATH", "NIHAL HELLO"):
        src, cw, dst = tmp_path / "in.txt", tmp_path / "cw.fibq", tmp_path / "out.txt"
        src.write_text(text + "\n")
        assert run(["encode", "--in", str(src), "--out", str(cw)])[0] == 0
        assert run(["decode", "--in", str(cw), "--out", str(dst)])[0] == 0
        assert dst.read_bytes() == (text + "\n").encode()


def test_failed_encode_leaves_no_output_file(tmp_path):
    src, cw = tmp_path / "in.txt", tmp_path / "cw.fibq"
    src.write_text("AY")
    assert run(["encode", "--in", str(src), "--out", str(cw)])[0] == 1
    assert not cw.exists()


def test_missing_input_file(tmp_path):
    code, _, err = run(["decode", "--in", str(tmp_path / "nope")])
    assert code == 1 and "No such file" in err


@pytest.mark.parametrize(
    "body, fragment",
    [
        ("", "bad header"),
        ("FIBQ2 b=1\n84 15 3 10\n", "bad header"),
        ("FIBQ1 b=01\n84 15 3 10\n", "bad header"),
        ("FIBQ1 b=2\n84 15 3 10\n", "row count mismatch"),
        ("FIBQ1 b=0\n", "empty codeword"),
        ("FIBQ1 b=2\n84 15 3 10\n84 15 3 10\n", "non-square b"),
        ("FIBQ1 b=1\n84 15 3\n", "malformed row"),
        ("FIBQ1 b=1\n84 15 3 x\n", "malformed row"),
        ("FIBQ1 b=1\n84  15 3 10\n", "malformed row"),
        ("FIBQ1 b=1\n84 15 27 10\n", "out-of-range field: b2=27"),
        ("FIBQ1 b=1\n677 15 3 10\n", "out-of-range field: d=677"),
        ("FIBQ1 b=1\n84 -1 3 10\n", "out-of-range field: b1=-1"),
        ("FIBQ1 b=1\n84 15 3 10\n\n", "row count mismatch"),
    ],
)
def test_parse_rejects(body, fragment):
    with pytest.raises(CodewordFormatError, match=fragment):
        parse_codeword(body)
    code, _, err = run(["decode"], body)
    assert code == 1 and fragment in err


def test_parse_diagnostics_are_distinct():
    bodies = [
        "nonsense\n",
        "FIBQ1 b=3\n84 15 3 10\n",
        "FIBQ1 b=0\n",
        "FIBQ1 b=2\n84 15 3 10\n84 15 3 10\n",
        "FIBQ1 b=1\n1 2\n",
        "FIBQ1 b=1\n84 15 99 10\n",
    ]
    kinds = []
    for body in bodies:
        with pytest.raises(CodewordFormatError) as info:
            parse_codeword(body)
        kinds.append(info.value.kind)
    assert len(set(kinds)) == len(bodies)


def test_parse_accepts_missing_final_newline():
    assert parse_codeword(EXAMPLE_2_FILE.rstrip("\n")) == encode("MATH")


@settings(max_examples=50)
@given(st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ ", min_size=1, max_size=80))
def test_format_parse_round_trip(raw):
    if first_zero_b2_block(normalize_text(raw)) is not None:
        return
    c = encode(raw)
    assert parse_codeword(format_codeword(c)) == c
    code, out, _ = run(["decode"], format_codeword(c))
    assert code == 0
    assert out == raw.rstrip(" ") + "\n"


def test_table():
    code, out, _ = run(["table", "4"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 27
    assert "N 17" in lines and "0 3" in lines
    lines = run(["table", "3"])[1].splitlines()
    assert {"M 15", "T 22", "Y 0"} <= set(lines)


def test_table_rejects_small_n():
    code, out, err = run(["table", "2"])
    assert code == 1 and out == "" and ">= 3" in err


def test_simulate_math():
    code, out, _ = run(["simulate", "MATH"])
    assert code == 0
    assert out == "total=1430\ndetected=1395\nsilent=35\nfraction=0.9755\n"
    assert run(["simulate", "--mode", "exhaustive"], "MATH\n")[1] == out


def test_simulate_seeded_is_byte_identical():
    msg = "THE QUIET BROWN FOX HOPS OVER A LAZY DOG WHILE SNOW FALLS ON SILENT STREETS"
    first = run(["simulate", msg, "--mode", "sampled", "--seed", "11", "--samples", "300"])
    second = run(["simulate", msg, "--mode", "sampled", "--seed", "11", "--samples", "300"])
    assert first == second
    assert first[0] == 0 and first[1].startswith("total=300\n")


def test_simulate_errors():
    assert run(["simulate", "AY"])[0] == 1
    code, _, err = run(["simulate", "MATH", "--mode", "exhaustive", "--seed", "3"])
    assert code == 1 and "--seed" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibq", "encode"], input="MATH\n", capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == EXAMPLE_2_FILE

import json
import random
import subprocess
import sys

import pytest
from hypothesis import given

from kleinbraid import (
    IDENTITY,
    SIGMA,
    BraidElem,
    ExponentOverflow,
    KleinElem,
    WordSyntaxError,
    b_pow,
    fixture_B0_even,
    parse_braid,
    parse_map_file,
    print_braid,
)
from kleinbraid.cli import build_report, dump_document, parse_document, parse_range, run_command
from kleinbraid.syntax import MAX_EXPONENT, format_map_file
from kleinbraid.words import A2, B2, FreeWord

from conftest import braid_elems, random_braid

C = BraidElem(FreeWord((-B2, A2, B2, A2)), KleinElem(0, 0), 0)


def write(tmp_path, text, name="m.map"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_examples():
    assert parse_braid("B2 a2 b2 a2") == C
    assert parse_braid("s s") == C
    assert parse_braid("s^2") == C
    assert parse_braid("1") == IDENTITY
    assert parse_braid("a1^2b1^-1s") == BraidElem(FreeWord(), KleinElem(2, -1), 1)
    assert parse_braid("S") == parse_braid("s^-1")
    assert parse_braid("A1 a1") == IDENTITY


def test_negative_sigma_powers():
    for e in range(-5, 6):
        assert parse_braid(f"s^{e}") == b_pow(SIGMA, e)


def test_print_examples():
    assert print_braid(IDENTITY) == "1"
    assert print_braid(BraidElem(FreeWord(), KleinElem(2, -1), 1)) == "a1^2 b1^-1 s"
    assert print_braid(parse_braid("s^2")) == "B2 a2 b2 a2"
    assert print_braid(BraidElem(FreeWord((A2, A2, -B2)))) == "a2^2 B2"


@given(braid_elems(max_len=8, bound=6))
def test_round_trip(x):
    assert parse_braid(print_braid(x)) == x


@pytest.mark.parametrize("text, pos", [("a1 x2", 3), ("a3", 0), ("a1^", 2), ("a1 ^2", 3)])
def test_syntax_error_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_braid(text)
    assert info.value.pos == pos


def test_empty_word_rejected():
    with pytest.raises(WordSyntaxError):
        parse_braid("  ")


def test_exponent_cap():
    parse_braid(f"a2^{MAX_EXPONENT}")
    with pytest.raises(ExponentOverflow):
        parse_braid(f"a2^{MAX_EXPONENT + 1}")


def test_map_file_parsing():
    d = parse_map_file("# comment\nalpha = 1\n\nbeta = s\n")
    assert d.alpha_hat == IDENTITY and d.beta_hat == parse_braid("s")
    d = fixture_B0_even(1, 2, 3, 0)
    assert parse_map_file(format_map_file(d, "x")) == d


@pytest.mark.parametrize("text", ["alpha = 1\n", "alpha = 1\nalpha = s\nbeta = s\n",
                                  "gamma = 1\n", "alpha = 1\nbeta = s q\n"])
def test_map_file_errors(text):
    with pytest.raises(WordSyntaxError):
        parse_map_file(text)


def test_map_file_error_position():
    text = "alpha = 1\nbeta =  s q\n"
    with pytest.raises(WordSyntaxError) as info:
        parse_map_file(text)
    assert text[info.value.pos] == "q"


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("-2:1") == [-2, -1, 0, 1]
    assert parse_range("1,3,5") == [1, 3, 5]


def test_cli_word_commands():
    assert run_command(["normalize", "s s"]) == (0, "word  B2 a2 b2 a2\nw     B2 a2 b2 a2\ng     (0, 0)\nk     0\n")
    code, out = run_command(["mul", "s", "S", "--format", "json"])
    assert code == 0 and json.loads(out)["word"] == "1"
    code, out = run_command(["inv", "s", "--format", "json"])
    assert json.loads(out)["word"] == "A2 B2 A2 b2 s"


def test_cli_nielsen_trivial(tmp_path):
    code, out = run_command(["nielsen", write(tmp_path, "alpha = 1\nbeta = s\n"), "--format", "json"])
    doc = json.loads(out)
    assert code == 0
    assert doc["type"] == "A"
    assert doc["nielsen"] == {"formula": 2, "coincidence": 2, "agree": True, "branch": "A", "zero": False}


def test_cli_nielsen_fixture(tmp_path):
    path = write(tmp_path, format_map_file(fixture_B0_even(1, 2, 3, 0)))
    code, out = run_command(["nielsen", path, "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["nielsen"]["formula"] == 4 and doc["nielsen"]["agree"]
    assert doc["f1"] == {"domain": "Klein", "img_a": [2, 0], "img_b": [2, 3], "bu_fails": True}


def test_cli_exit_codes(tmp_path):
    invalid = write(tmp_path, "alpha = a1\nbeta = s\n", "bad.map")
    split = write(tmp_path, "alpha = 1\nbeta = a2\n", "split.map")
    broken = write(tmp_path, "alpha = a1 ?\nbeta = s\n", "broken.map")
    assert run_command(["check", invalid])[0] == 2
    assert run_command(["classify", invalid])[0] == 2
    assert run_command(["nielsen", invalid])[0] == 2
    assert run_command(["lift", split])[0] == 3
    assert run_command(["nielsen", split])[0] == 3
    assert run_command(["check", split])[0] == 0
    assert run_command(["nielsen", broken])[0] == 1
    assert run_command(["nielsen", str(tmp_path / "missing.map")])[0] == 1
    assert run_command(["normalize", "a1^"])[0] == 1
    assert run_command(["frobnicate"])[0] == 1


def test_cli_text_output(tmp_path):
    code, out = run_command(["classify", write(tmp_path, "alpha = 1\nbeta = s\n")])
    assert code == 0
    assert out.splitlines() == ["valid  true", "split  false", "type   A"]


def test_report_round_trip_and_determinism(tmp_path):
    path = write(tmp_path, format_map_file(fixture_B0_even(-2, 1, 5, 3)))
    first = run_command(["nielsen", path, "--format", "json"])[1]
    second = run_command(["nielsen", path, "--format", "json"])[1]
    assert first == second
    doc = parse_document(first)
    assert dump_document(doc) == first
    assert doc == build_report(fixture_B0_even(-2, 1, 5, 3))[0]
    assert list(doc) == ["valid", "split", "type", "params", "constraints", "f1", "f2", "nielsen"]


def test_cli_fixtures_writes_files(tmp_path):
    code, out = run_command(["fixtures", "b0-even", "--x=-1:1", "--z=1,2,3", "--out", str(tmp_path)])
    assert code == 0
    files = sorted(tmp_path.glob("*.map"))
    assert len(files) == 6
    for f in files:
        assert run_command(["nielsen", str(f)])[0] == 0


def test_cli_sweep_both_families():
    code, out = run_command(["sweep", "--x=-3:3", "--y=-3:3", "--z=-5:5", "--l=-3:3", "--format", "json"])
    doc = json.loads(out)
    assert code == 0
    assert doc["cells"] == 7 * 7 * 6 * 7 + 7 * 7 * 6
    assert doc["disagreements"] == 0
    assert all(r["formula"] == r["coincidence"] for r in doc["rows"])


def test_cli_sweep_text():
    code, out = run_command(["sweep", "--family", "b0-odd", "--x=0", "--z=1,3"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split() == ["name", "type", "formula", "coincidence", "agree", "zero"]
    assert lines[1].split()[2:] == ["0", "0", "true", "true"]
    assert lines[-1] == "2 cells, 0 disagreements"


def test_console_entry_point(tmp_path):
    path = write(tmp_path, "alpha = 1\nbeta = s\n")
    out = subprocess.run([sys.executable, "-m", "kleinbraid", "nielsen", path, "--format", "json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["nielsen"]["formula"] == 2


def test_round_trip_fuzz():
    rng = random.Random(11)
    for _ in range(500):
        x = random_braid(rng, max_len=10, bound=20)
        assert parse_braid(print_braid(x)) == x

from fractions import Fraction
from pathlib import Path

import pytest

from arrangement_cw.catalog import scalene_pencil, two_lines
from arrangement_cw.formats import (
    InputError, Problem, dump_problem, format_signs, format_structured, parse_flag_file,
    parse_input, parse_signs, parse_structured, parse_text,
)

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def test_one_dimensional_example():
    prob = parse_text('{"dim":1, "hyperplanes":[[1,0]]}')
    assert prob.arrangement.dim == 1 and len(prob.arrangement) == 1
    assert prob.flag is None and prob.weights is None


def test_bare_and_quoted_rationals():
    prob = parse_text('{"dim":2, "hyperplanes":[[-1,1,-1/2],[1,1,"-1/2"]]}')
    assert prob.arrangement.rows() == two_lines().rows()


def test_data_files_parse():
    prob = parse_input(DATA / "scalene_pencil.yaml")
    assert prob.arrangement.rows() == scalene_pencil().rows()
    prob = parse_input(DATA / "two_lines.yaml")
    assert prob.weights == (2, Fraction(1, 3))
    prob = parse_input(DATA / "generic_triangle.yaml")
    assert prob.flag.basepoint == (100, 75)


@pytest.mark.parametrize("text, message, line", [
    ("dim: 2\nhyperplanes:\n  - [1, 0, 0]\n  - [2, 0, 0]\n", "duplicates hyperplane 1", 4),
    ("dim: 2\nhyperplanes:\n  - [0, 0, 1]\n", "zero normal", 3),
    ("dim: 2\nhyperplanes:\n  - [1, x, 0]\n", "malformed rational", 3),
    ("dim: 2\nhyperplanes:\n  - [1, 0.5, 0]\n", "malformed rational", 3),
    ("dim: 2\nhyperplanes:\n  - [1, 1/0, 0]\n", "zero denominator", 3),
    ("dim: 0\nhyperplanes: []\n", "bad dimension", 1),
    ("dim: two\nhyperplanes: []\n", "bad dimension", 1),
    ("dim: 2\nhyperplanes:\n  - [1, 0]\n", "expected 3", 3),
    ("hyperplanes: []\n", "missing 'dim'", 1),
    ("dim: 2\n", "missing 'hyperplanes'", 1),
    ("dim: 2\nhyperplanes: [[1, 0, 0]]\nweights: [0]\n", "weights must be nonzero", 3),
    ("dim: 2\nhyperplanes: [[1, 0, 0]]\nflag: {base: [0, 0], basis: [[1, 1], [2, 2]]}\n",
     "dependent", 3),
])
def test_diagnostics_carry_line_numbers(text, message, line):
    with pytest.raises(InputError, match=message) as info:
        parse_text(text, "demo.yaml")
    assert info.value.line == line
    assert str(info.value).startswith(f"demo.yaml:{line}:")


def test_missing_file():
    with pytest.raises(InputError):
        parse_input("/nonexistent/file.yaml")


def test_broken_yaml():
    with pytest.raises(InputError, match="not a valid document"):
        parse_text("dim: [1,\n")


def test_dump_round_trip():
    prob = parse_input(DATA / "two_lines.yaml")
    again = parse_text(dump_problem(prob))
    assert again.arrangement.rows() == prob.arrangement.rows()
    assert again.weights == prob.weights
    flagged = parse_input(DATA / "generic_triangle.yaml")
    assert parse_text(dump_problem(flagged)).flag == flagged.flag


def test_flag_file(tmp_path):
    path = tmp_path / "flag.yaml"
    path.write_text("base: [1, 2]\nbasis: [[1, 0], [0, 1]]\n")
    assert parse_flag_file(path, 2).basepoint == (1, 2)
    path.write_text("flag: {base: [1, 2], basis: [[1, 0], [0, 1]]}\n")
    assert parse_flag_file(path, 2).basis == ((1, 0), (0, 1))
    with pytest.raises(InputError):
        parse_flag_file(path, 3)


def test_structured_round_trip():
    pairs = [("d2[1,1]", "q1*q2 - q1^-1*q2^-1"), ("h", "(1, 3, 3)"), ("empty", "")]
    assert parse_structured(format_structured(pairs)) == pairs
    with pytest.raises(ValueError):
        format_structured([("a\nb", "c")])


def test_sign_strings():
    assert format_signs((1, -1, 0)) == "+-0"
    assert parse_signs("+-0") == (1, -1, 0)
    with pytest.raises(ValueError):
        parse_signs("+x")

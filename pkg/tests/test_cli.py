import json

import pytest

from permintervals.cli import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ParseError,
    format_instance,
    main,
    parse_input,
)
from permintervals.core import LengthMismatch
from conftest import EX1_RAW, EX2_RAW


def write_instance(tmp_path, raws, name="inst.txt"):
    path = tmp_path / name
    path.write_text(format_instance(raws))
    return str(path)


def test_parse_input_basic():
    assert parse_input("1 2 3\n3 2 1\n") == [[1, 2, 3], [3, 2, 1]]


def test_parse_input_signed_and_comments():
    text = "# a comment\n1 2 3 4 5 6 7\n1 -3 -2 6 -4 -5 7  # trailing\n\n"
    assert parse_input(text) == EX2_RAW


def test_parse_input_length_mismatch():
    with pytest.raises(LengthMismatch):
        parse_input("1 2\n1 2 3\n")


def test_parse_input_bad_token():
    with pytest.raises(ParseError) as exc:
        parse_input("1 2\nx 2\n")
    assert exc.value.line == 2
    assert exc.value.col == 1


def test_parse_input_empty():
    with pytest.raises(ParseError):
        parse_input("# nothing here\n")


def test_round_trip_through_format(tmp_path):
    text = format_instance(EX2_RAW)
    assert parse_input(text) == EX2_RAW


def test_search_text_output(tmp_path, capsys):
    path = write_instance(tmp_path, EX1_RAW)
    assert main(["search", path, "--class", "common", "--stats"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[:7] == ["4 5", "4 6", "3 6", "1 2", "1 3", "1 6", "1 7"]
    assert lines[7] == "# N=7"


def test_search_json_output(tmp_path, capsys):
    path = write_instance(tmp_path, EX2_RAW)
    code = main(["search", path, "--class", "conserved", "--format", "json"])
    assert code == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["class"] == "conserved"
    assert doc["n"] == 7
    assert doc["k"] == 2
    assert doc["count"] == 2
    assert doc["intervals"] == [[2, 3], [1, 7]]
    assert "op_counters" in doc


def test_search_empty_report(tmp_path, capsys):
    path = write_instance(tmp_path, [[1, 2, 3], [1, -2, 3]])
    code = main(["search", path, "--class", "same-sign-common", "--stats"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "# N=0"


def test_search_check_oracle_ok(tmp_path, capsys):
    path = write_instance(tmp_path, EX1_RAW)
    for cls in ("common", "nested", "maximal-nested", "irreducible-common"):
        assert main(["search", path, "--class", cls, "--check-oracle"]) == EXIT_OK
        capsys.readouterr()


def test_search_requires_identity_without_renumber(tmp_path, capsys):
    path = write_instance(tmp_path, [[2, 1, 3], [3, 2, 1]])
    assert main(["search", path]) == EXIT_VALIDATION
    capsys.readouterr()
    assert main(["search", path, "--renumber", "--check-oracle"]) == EXIT_OK


def test_search_validation_error(tmp_path, capsys):
    path = write_instance(tmp_path, [[1, 2, 3], [-1, 2, 3]])
    assert main(["search", path, "--class", "conserved"]) == EXIT_VALIDATION
    err = capsys.readouterr().err
    assert "ConservedEndpointViolation" in err


def test_search_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1 2\n1 x\n")
    assert main(["search", str(path)]) == EXIT_USAGE
    capsys.readouterr()


def test_search_missing_file(capsys):
    assert main(["search", "/nonexistent/input.txt"]) == EXIT_USAGE
    capsys.readouterr()


def test_usage_error_exit_code(capsys):
    assert main(["search"]) == EXIT_USAGE
    assert main(["bogus"]) == EXIT_USAGE
    capsys.readouterr()


def test_gen_deterministic_and_parseable(capsys):
    assert main(["gen", "--n", "8", "--k", "3", "--seed", "42", "--signed"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["gen", "--n", "8", "--k", "3", "--seed", "42", "--signed"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    raws = parse_input(first)
    assert len(raws) == 3
    assert raws[0] == list(range(1, 9))


def test_gen_conserved_endpoints(tmp_path, capsys):
    assert main(["gen", "--n", "9", "--k", "4", "--seed", "7", "--signed",
                 "--conserved"]) == EXIT_OK
    out = capsys.readouterr().out
    raws = parse_input(out)
    for p in raws:
        assert p[0] == 1 and p[-1] == 9
    path = tmp_path / "cons.txt"
    path.write_text(out)
    code = main(["search", str(path), "--class", "irreducible-conserved",
                 "--check-oracle"])
    assert code == EXIT_OK
    capsys.readouterr()

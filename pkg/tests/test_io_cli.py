import io
import json
import os
import subprocess
import sys

import pytest

from latmark.binomial import Binomial
from latmark.cli import main
from latmark.errors import ParseError
from latmark.io import (
    fixture_path,
    format_binomial,
    from_json,
    parse_binomials,
    parse_lattice,
    read_binomials,
    to_json,
)
from latmark.lattice import canonicalize, lattices_equal
from latmark.pure import decompose
from latmark.synthesis import fiber_descriptor, markov_basis_general


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def fx(name):
    return str(fixture_path(name))


# --- parsing ----------------------------------------------------------------


def test_parse_lattice():
    L = parse_lattice("# comment\n2 2\n1 1\n\n5,0\n")
    assert lattices_equal(L, canonicalize([(1, 1), (5, 0)], 2))
    assert parse_lattice("3 0\n").rank == 0


@pytest.mark.parametrize(
    "text",
    ["", "2\n", "2 1\n1 1 1\n", "2 2\n1 1\n", "2 1\n1 a\n", "-1 0\n"],
)
def test_parse_lattice_errors(text):
    with pytest.raises(ParseError):
        parse_lattice(text)


def test_parse_binomials_text_and_json():
    text = "0,0 | 1,1  # 1 - x1*x2\n# skip\n3 0 | 0 2\n"
    S = parse_binomials(text, 2)
    assert S == [Binomial((0, 0), (1, 1)), Binomial((3, 0), (0, 2))]
    js = json.dumps([{"plus": [0, 0], "minus": [1, 1]}])
    assert parse_binomials(js, 2) == S[:1]
    assert parse_binomials(json.dumps({"binomials": json.loads(js)}), 2) == S[:1]
    # formatted output parses back
    assert parse_binomials("\n".join(format_binomial(b) for b in S), 2) == S


@pytest.mark.parametrize(
    "text",
    ["0,0 1,1", "0,0 | 1", "0,-1 | 1,0", "[{\"plus\": [0]}]", "[1, 2", "0 | 1 | 2"],
)
def test_parse_binomial_errors(text):
    with pytest.raises(ParseError):
        parse_binomials(text, 2)


def test_fixture_sets():
    assert len(read_binomials(fx("worked_example_generators.bin"), 5)) == 16
    assert len(read_binomials(fx("worked_example_markov.bin"), 5)) == 4


def test_json_round_trip(worked):
    for obj in (
        decompose(worked),
        markov_basis_general(worked),
        fiber_descriptor(worked, (0, 0, 0, 0, 1)),
        markov_basis_general(canonicalize([(1, 1)], 2)),
    ):
        text = to_json(obj)
        assert json.loads(text)["schema"] == 1
        assert from_json(text) == obj


def test_json_schema_mismatch():
    with pytest.raises(ParseError):
        from_json('{"schema": 99, "report": null}')


# --- command line -----------------------------------------------------------


def test_cli_decompose():
    code, out = run("decompose", fx("worked_example.lat"))
    assert code == 0
    assert "sigma: {1,2}" in out
    assert "rank: 4 = 2 (projected) + 2 (pure)" in out
    assert "size 5" in out


def test_cli_markov():
    code, out = run("markov", fx("worked_example.lat"))
    assert code == 0 and "mu: 4" in out
    assert "binomial complete intersection: yes" in out
    code, out = run("markov", fx("macaulay.lat"), "--seed", "3")
    assert code == 0 and "mu: 4" in out and "complete intersection: no" in out


def test_cli_markov_json():
    code, out = run("markov", fx("plane.lat"), "--json")
    assert code == 0
    assert from_json(out).mu == 2


def test_cli_fibers_and_hilbert():
    code, out = run("fibers", fx("worked_example.lat"), "--monomial", "0,0,0,0,1")
    assert code == 0
    assert "minimal generators (14)" in out and "projected fiber (8)" in out
    assert "x3^6" in out and "components: 2" in out
    code, out = run("hilbert", fx("plane.lat"))
    assert code == 0 and out.count("#") == 3


def test_cli_ci():
    code, out = run("ci", fx("worked_example.lat"))
    assert code == 0 and "complete intersection: yes" in out and "certificate" in out


def test_cli_indispensable():
    code, out = run("indispensable", fx("worked_example.lat"))
    assert out.splitlines() == ["binomials: none", "monomials: 1"]
    code, out = run("indispensable", fx("pure_rank1.lat"))
    assert out.splitlines() == ["binomials: x1*x2 - 1", "monomials: x1*x2, 1"]


@pytest.mark.parametrize(
    "lat,bins,mode,expected",
    [
        ("plane.lat", "plane_pure.bin", "markov", 0),
        ("plane.lat", "plane_mixed.bin", "markov", 0),
        ("plane.lat", "plane_large.bin", "markov", 0),
        ("plane.lat", "plane_three.bin", "markov", 1),
        ("plane.lat", "plane_three.bin", "generating", 0),
        ("plane.lat", "plane_pure.bin", "pure", 0),
        ("plane.lat", "plane_three.bin", "pure", 1),
        ("worked_example.lat", "worked_example_markov.bin", "markov", 0),
        ("worked_example.lat", "worked_example_generators.bin", "generating", 0),
        ("worked_example.lat", "worked_example_generators.bin", "markov", 1),
        ("worked_example.lat", "worked_example_markov.bin", "pure", 1),
        ("plane.lat", "plane_bad.bin", "markov", 2),
    ],
)
def test_cli_verify(lat, bins, mode, expected):
    code, out = run("verify", fx(lat), "--set", fx(bins), "--mode", mode)
    assert code == expected
    if expected == 0:
        assert out.strip() == "OK"
    elif expected == 1:
        assert out.startswith("FAIL: ")


def test_cli_verify_json():
    code, out = run("verify", fx("plane.lat"), "--set", fx("plane_three.bin"), "--json")
    doc = json.loads(out)
    assert code == 1 and doc["ok"] is False and doc["failures"]


def test_cli_input_errors(tmp_path, capsys):
    assert run("markov", str(tmp_path / "missing.lat"))[0] == 2
    bad = tmp_path / "bad.lat"
    bad.write_text("2 1\n1 x\n")
    assert run("markov", str(bad))[0] == 2
    assert run("verify", fx("plane.lat"))[0] == 2
    assert run("fibers", fx("plane.lat"), "--monomial", "1,a")[0] == 2
    assert run("fibers", fx("plane.lat"), "--monomial", "1,0,0")[0] == 2
    wrong = tmp_path / "wrong.bin"
    wrong.write_text("0,0,0 | 1,1,1\n")
    assert run("verify", fx("plane.lat"), "--set", str(wrong))[0] == 2
    assert "error:" in capsys.readouterr().err


def test_cli_empty_lattice(tmp_path):
    f = tmp_path / "zero.lat"
    f.write_text("3 0\n")
    code, out = run("markov", str(f))
    assert code == 0 and "mu: 0" in out
    code, out = run("indispensable", str(f))
    assert out.splitlines() == ["binomials: none", "monomials: none"]


def test_cli_fiber_cap_exit_code():
    env = dict(os.environ, LATMARK_MAX_FIBER="3")
    p = subprocess.run(
        [sys.executable, "-m", "latmark.cli", "fibers", fx("worked_example.lat"), "--monomial", "0,0,0,0,1"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert p.returncode == 3, p.stderr


def test_console_script_entry_point():
    p = subprocess.run([sys.executable, "-m", "latmark.cli", "--help"], capture_output=True, text=True)
    assert p.returncode == 0 and "latmark" in p.stdout

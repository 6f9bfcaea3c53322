import json
import re

import pytest

from mckay_slodowy.cli import run


def _capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pair_poincare_example(capsys):
    code, out, _ = _capture(
        capsys, ["pair", "A2^2", "poincare", "--vertex", "0", "--terms", "10", "--closed-form"]
    )
    assert code == 0
    assert "(1) / (1 - 4*t^2)" in out
    assert "1 0 4 0 16 0 64 0 256 0" in out


def test_chartable_tetrahedral_layout(capsys):
    code, out, _ = _capture(capsys, ["chartable", "binary_tetrahedral"])
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 9  # header + sizes + 7 rows
    assert lines[0].split()[-7:] == ["1", "-1", "x", "z", "z^2", "-z", "-z^2"]
    assert any(l.startswith("tau_2") for l in lines)


def test_chartable_numeric_flag(capsys):
    code, out, _ = _capture(capsys, ["chartable", "alternating4", "--numeric"])
    assert code == 0
    assert "chi_" in out


def test_verify_pair_exit_zero(capsys):
    code, out, _ = _capture(capsys, ["verify", "--pair", "S4A4"])
    assert code == 0
    assert "denominator identity" in out
    assert "FAIL" not in out


def test_verify_requires_target(capsys):
    code, _, err = _capture(capsys, ["verify"])
    assert code == 1
    assert "domain error" in err


def test_domain_error_exit_one(capsys):
    code, _, err = _capture(capsys, ["pair", "Dn+1^2", "--n", "1"])
    assert code == 1
    assert "requires n >=" in err


def test_usage_error_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 64


def test_json_outputs_parse(capsys):
    for argv in (
        ["group", "binary_dihedral", "--n", "3", "--json"],
        ["chartable", "symmetric4", "--json"],
        ["pair", "D4^3", "--json"],
        ["poincare", "--pair", "E6^2", "--side", "res", "--vertex", "0",
         "--terms", "8", "--closed-form", "--json"],
        ["chebyshev", "U", "4", "--json"],
        ["exponents", "--type", "C_3^(1)", "--json"],
        ["verify", "--pair", "A2^2", "--json"],
    ):
        code, out, _ = _capture(capsys, argv)
        assert code == 0, argv
        payload = json.loads(out)
        assert payload, argv


def test_json_error_detail_on_stderr(capsys):
    code, _, err = _capture(capsys, ["poincare", "--pair", "A2n^2", "--n", "1", "--json"])
    assert code == 1
    detail = json.loads(err)
    assert detail["error"] == "domain error"


def test_poincare_series_values(capsys):
    code, out, _ = _capture(
        capsys,
        ["poincare", "--pair", "S4A4", "--side", "res", "--vertex", "2", "--terms", "8"],
    )
    assert code == 0
    assert "0 1 2 7 20 61 182 547" in out


def test_pair_show_and_dot(capsys):
    code, out, _ = _capture(capsys, ["pair", "E6^2"])
    assert code == 0
    assert "E_6^(2)" in out and "F_4^(1)" in out
    code, out, _ = _capture(capsys, ["pair", "Dn+1^2", "--n", "3", "--dot"])
    assert code == 0
    _assert_valid_dot(out)


def test_dot_valid_for_all_pairs(capsys):
    cases = [("A2n-1^2", n) for n in range(3, 9)]
    cases += [("Dn+1^2", n) for n in range(2, 9)]
    cases += [("A2n^2", n) for n in range(2, 9)]
    cases += [("E6^2", None), ("D4^3", None), ("A2^2", None), ("S4A4", None)]
    for name, n in cases:
        argv = ["pair", name, "--dot"] + ([] if n is None else ["--n", str(n)])
        for side in ("res", "ind"):
            code, out, _ = _capture(capsys, argv + ["--side", side])
            assert code == 0
            _assert_valid_dot(out)


def _assert_valid_dot(text: str) -> None:
    """Minimal DOT grammar check: digraph wrapper, balanced braces/brackets,
    every statement a node or edge line."""
    lines = [l.strip() for l in text.strip().splitlines()]
    assert lines[0] == "digraph representation_graph {"
    assert lines[-1] == "}"
    node_re = re.compile(r'^\d+ \[label=".+ \(\d+\)"\];$')
    edge_re = re.compile(r"^\d+ -> \d+ \[(dir=none, )?multiplicity=\d+\];$")
    for line in lines[1:-1]:
        assert node_re.match(line) or edge_re.match(line), line


def test_chebyshev_text(capsys):
    code, out, _ = _capture(capsys, ["chebyshev", "T", "3"])
    assert code == 0
    assert "[0, -3, 0, 4]" in out


def test_exponents_text(capsys):
    code, out, _ = _capture(capsys, ["exponents", "--type", "D_4^(3)"])
    assert code == 0
    assert "exponents [0, 1, 2]" in out
    assert "Coxeter number 2" in out
    code, _, err = _capture(capsys, ["exponents", "--type", "Q_1^(9)"])
    assert code == 1


def test_unicode_flag(capsys):
    code, out, _ = _capture(capsys, ["chartable", "binary_dihedral", "--n", "2", "--unicode"])
    assert code == 0
    assert "δ" in out


def test_verify_all_small_range(capsys):
    code, out, _ = _capture(capsys, ["verify", "--all", "--n-max", "2", "--k-max", "6"])
    assert code == 0
    assert "FAIL" not in out
    assert "Chebyshev identity suite" in out
    assert "exponent duality" in out

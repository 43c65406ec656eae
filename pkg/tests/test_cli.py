import json
import re
from pathlib import Path

import pytest

from bialgebroid.cli import build_parser, main

ROOT = Path(__file__).parent.parent
GOLDEN = Path(__file__).parent / "golden"

STRIP_ELAPSED = re.compile(r',\s*"elapsed_ms": \d+')


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, STRIP_ELAPSED.sub("", out)


@pytest.fixture(autouse=True)
def repo_root_cwd(monkeypatch):
    # spec paths are echoed verbatim in reports, so pin the working directory
    monkeypatch.chdir(ROOT)


GOLDEN_CASES = [
    ("check-a-plus-b", 0, ["check", "tests/fixtures/a-plus-b.json"]),
    ("validate-invalid-jacobi", 1, ["validate", "tests/fixtures/invalid-jacobi.json"]),
    ("identities-theorem-c-a-plus-b", 0,
     ["identities", "tests/fixtures/a-plus-b.json", "--suite", "theorem-c"]),
    ("modular-poisson-linear", 0, ["modular", "tests/fixtures/poisson-linear.json"]),
    ("example-a-plus-b", 0,
     ["example", "a-plus-b", "--a", "1", "--b", "2", "--c", "3", "--d", "4"]),
]


@pytest.mark.parametrize("name, want_code, argv", GOLDEN_CASES)
def test_golden_output(capsys, name, want_code, argv):
    code, out = run(capsys, *argv)
    assert code == want_code
    assert out == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("name, want_code, argv", GOLDEN_CASES)
def test_output_is_stable_across_runs(capsys, name, want_code, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_exit_status_field_matches_return_code(capsys):
    for _, want, argv in GOLDEN_CASES:
        code, out = run(capsys, *argv)
        assert json.loads(out)["exit_status"] == code == want


# -- exit code policy ------------------------------------------------------------


def test_validate_good_pair(capsys):
    code, out = run(capsys, "validate", "tests/fixtures/poisson-linear.json")
    assert code == 0
    body = json.loads(out)
    assert body["pass"] and body["A"]["jacobi_ok"]


def test_check_incompatible_pair_is_exit_1(capsys):
    code, out = run(capsys, "check", "tests/fixtures/broken-rank3.json")
    assert code == 1
    body = json.loads(out)
    assert body["is_scalar"] is False
    assert body["square_formula_ok"] is True
    assert "witness" in body


def test_identities_all_suites_on_good_pair(capsys):
    for suite in ("theorem-c", "corollaries", "courant", "generator"):
        code, out = run(capsys, "identities", "tests/fixtures/a-plus-b.json",
                        "--suite", suite)
        assert code == 0, suite
        body = json.loads(out)["suite"]
        assert body["pass"] is True
        assert all(r["pass"] for r in body["identities"])


def test_corollaries_refused_without_compatibility(capsys):
    code, out = run(capsys, "identities", "tests/fixtures/broken-rank3.json",
                    "--suite", "corollaries")
    assert code == 2
    assert "error" in json.loads(out)


def test_bad_bracket_key_is_input_error(capsys):
    code, out = run(capsys, "validate", "tests/fixtures/bad-key.json")
    assert code == 2
    assert "1 <= i < j" in json.loads(out)["error"]


def test_missing_file_is_input_error(capsys):
    code, out = run(capsys, "check", "tests/fixtures/no-such-file.json")
    assert code == 2
    assert "error" in json.loads(out)


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_probe_degree_below_two_is_input_error(capsys):
    code, out = run(capsys, "check", "tests/fixtures/a-plus-b.json",
                    "--probe-degree", "1")
    assert code == 2
    assert "order-2" in json.loads(out)["error"]


# -- example families --------------------------------------------------------------


def test_example_poisson(capsys):
    code, out = run(capsys, "example", "poisson", "--dim", "2",
                    "--pi", '[["0", "x1"], ["-x1", "0"]]')
    assert code == 0
    body = json.loads(out)
    assert body["family"] == "poisson"
    assert body["pair"]["base_dim"] == 2
    assert body["suite"]["pass"] is True


def test_example_exact(capsys):
    code, out = run(capsys, "example", "exact", "tests/fixtures/tangent-r3.json",
                    "--lambda", '{"1,2": "1"}')
    assert code == 0
    body = json.loads(out)
    assert body["pair"]["label"] == "triangular"


def test_example_pn(capsys):
    code, out = run(capsys, "example", "pn", "tests/fixtures/tangent-r3.json",
                    "--n", '[["x1","0","0"],["0","x1","0"],["0","0","1"]]',
                    "--lambda", '{"1,2": "1"}', "--k", "1", "--l", "1")
    assert code == 0
    body = json.loads(out)
    assert body["pair"]["label"] == "pn-l1-k1"
    assert body["suite"]["pass"] is True
    assert {r["id"] for r in body["suite"]["identities"]} >= {"pn/scene", "pn/legality"}


def test_example_pn_rejects_bad_matrix(capsys):
    code, out = run(capsys, "example", "pn", "tests/fixtures/tangent-r3.json",
                    "--n", '[["1","0","0"],["0","1","0"],["0","0","x1"]]',
                    "--lambda", '{"1,2": "1"}')
    assert code == 2
    assert "torsion" in json.loads(out)["error"]


# -- text rendering -----------------------------------------------------------------


def test_text_output_mode(capsys):
    code = main(["--output", "text", "check", "tests/fixtures/a-plus-b.json"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert "command: check" in lines
    assert "f_tilde: -11/4" in lines
    assert any(line.startswith("elapsed_ms: ") for line in lines)


def test_text_output_nested_keys(capsys):
    main(["--output", "text", "validate", "tests/fixtures/invalid-jacobi.json"])
    out = capsys.readouterr().out
    assert "A.jacobi_ok: False" in out
    assert "A.witnesses[0].kind: jacobi" in out


def test_parser_help_smoke():
    parser = build_parser()
    assert parser.prog == "bialgebroid"
    with pytest.raises(SystemExit) as exc:
        parser.parse_args(["--help"])
    assert exc.value.code == 0

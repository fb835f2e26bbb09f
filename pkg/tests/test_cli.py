import io
import subprocess
import sys

import pytest

from selt.cli import CliConfig, config_from_args, main, run_game, run_sat

GAME = """\
players 2
moves 1 Cautious Risky
moves 2 Cautious Risky
outcome Cautious Cautious : 0
outcome Cautious Risky : -1 0 1
outcome Risky Cautious : -1 0 1
outcome Risky Risky : -2 -1 0 1 2
"""


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_sat_find_prints_satisfying_witness(write, capsys):
    path = write("f.cnf", "p cnf 2 1\n1 2 0")
    code, out, _ = run(["sat-find", path], capsys)
    assert code == 10
    lines = out.splitlines()
    assert lines[0] == "SAT"
    lits = [int(t) for t in lines[1].split()]
    assert sorted(abs(k) for k in lits) == [1, 2]
    assert any(k > 0 for k in lits)


def test_sat_decide_dpll_unsat(write, capsys):
    path = write("f.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = run(["sat-decide", path, "--method", "dpll"], capsys)
    assert (code, out) == (20, "UNSAT\n")


def test_sat_find_dpll_unsat_has_no_witness(write, capsys):
    path = write("f.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = run(["sat-find", path, "--method", "dpll"], capsys)
    assert (code, out) == (20, "UNSAT\n")


def test_sat_find_dpll_sat(write, capsys):
    path = write("f.cnf", "p cnf 2 2\n-1 0\n1 2 0\n")
    code, out, _ = run(["sat-find", path, "--method", "dpll"], capsys)
    assert code == 10
    assert out.splitlines() == ["SAT", "-1 2"]


def test_missing_file(capsys, tmp_path):
    code, out, err = run(["sat-decide", str(tmp_path / "nope.cnf")], capsys)
    assert code == 1
    assert out == ""
    assert "cannot read" in err


def test_parse_error_status(write, capsys):
    path = write("f.cnf", "p cnf 1 1\n2 0\n")
    code, _, err = run(["sat-decide", path], capsys)
    assert code == 1
    assert "line 2" in err and "out of range" in err


@pytest.mark.parametrize("sub", ["sat-decide", "sat-find"])
@pytest.mark.parametrize("method", ["naive", "dpll"])
def test_trace_lines_and_count(write, capsys, sub, method):
    path = write("f.cnf", "p cnf 2 2\n1 0\n-1 2 0\n")
    code, out, _ = run([sub, path, "--method", method, "--trace"], capsys)
    lines = out.splitlines()
    queries = [l for l in lines if l.startswith("query ")]
    assert queries
    assert f"queries: {len(queries)}" in lines
    assert code == 10 and "SAT" in lines


def test_game_solve_cautious(write, capsys):
    path = write("g.txt", GAME)
    code, out, _ = run(["game-solve", path, "--policy", "cautiousmax", "--policy", "cautiousmin"], capsys)
    assert (code, out) == (0, "Risky Cautious\n")


def test_game_solve_risky_with_check(write, capsys):
    path = write("g.txt", GAME)
    code, out, _ = run(["game-solve", path, "--policy", "riskymax", "--policy", "riskymin", "--check"], capsys)
    assert (code, out) == (0, "Risky Risky\noptimal: yes\n")


def test_game_solve_declared_policy_with_bounds(write, capsys):
    # high=0 rejects both replies to Risky, so the declared bound must be honoured
    path = write("g.txt", GAME + "policy 2 cautiousmin -1 0\n")
    code, _, err = run(["game-solve", path, "--policy", "riskymax", "--policy", "cautiousmin"], capsys)
    assert code == 1
    assert "cautiousmin (high=0)" in err


def test_game_solve_inadmissible(write, capsys):
    # every outcome exceeds the cautious upper bound of +1
    text = GAME.replace(": 0\n", ": 3\n").replace(": -1 0 1\n", ": 2 3\n").replace(": -2 -1 0 1 2\n", ": 2 5\n")
    path = write("g.txt", text)
    code, out, err = run(["game-solve", path, "--policy", "riskymax", "--policy", "cautiousmin"], capsys)
    assert code == 1
    assert "no admissible move" in err
    assert "Cautious" in err


def test_game_solve_wrong_policy_count(write, capsys):
    path = write("g.txt", GAME)
    code, _, err = run(["game-solve", path, "--policy", "riskymax"], capsys)
    assert code == 1 and "2 players" in err


def test_game_solve_unknown_policy(write, capsys):
    path = write("g.txt", GAME)
    code, _, err = run(["game-solve", path, "--policy", "riskymax", "--policy", "greedy"], capsys)
    assert code == 1 and "unknown" in err


def test_game_parse_error(write, capsys):
    path = write("g.txt", GAME.replace("outcome Risky Risky : -2 -1 0 1 2\n", ""))
    code, _, err = run(["game-solve", path, "--policy", "riskymax", "--policy", "riskymin"], capsys)
    assert code == 1 and "incomplete outcome table" in err


def test_method_rejected_for_games(write):
    path = write("g.txt", GAME)
    with pytest.raises(SystemExit):
        config_from_args(["game-solve", path, "--method", "dpll"])


def test_config_from_args():
    cfg = config_from_args(["sat-find", "x.cnf", "--method", "dpll", "--trace", "--seed", "3"])
    assert cfg == CliConfig("sat-find", "x.cnf", "dpll", True, (), False, 3)


def test_reports_are_deterministic(write):
    path = write("f.cnf", "p cnf 3 3\n1 -2 0\n2 3 0\n-1 -3 0\n")
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run_sat(CliConfig("sat-find", path, trace=True), out=buf, err=buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    gpath = write("g.txt", GAME)
    gouts = []
    for _ in range(2):
        buf = io.StringIO()
        run_game(CliConfig("game-solve", gpath, policy_names=("riskymax", "cautiousmin"), check=True), out=buf, err=buf)
        gouts.append(buf.getvalue())
    assert gouts[0] == gouts[1] == "Risky Cautious\noptimal: yes\n"


def test_module_entry_point(write):
    path = write("f.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    proc = subprocess.run([sys.executable, "-m", "selt", "sat-decide", path], capture_output=True, text=True)
    assert proc.returncode == 20
    assert proc.stdout == "UNSAT\n"

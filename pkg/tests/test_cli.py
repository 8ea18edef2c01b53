import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from gmdcodes.cli import REPRODUCERS, RunConfig, main
from conftest import GOLDEN

EX71 = ["--field", "2^2", "--family", "nested-cartesian", "--factors",
        '[["0","1"],["0","1"],"all"]', "--order", "lex", "--priority", "t3,t2,t1"]


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("name", sorted(REPRODUCERS))
def test_reproduce_matches_golden(name):
    code, out = run(["reproduce", name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


def test_golden_contents():
    ex71 = (GOLDEN / "ex7.1.txt").read_text(encoding="utf-8")
    assert "delta(d,1) |  8  4  3  1  1" in ex71
    assert "conjecture refuted at d=4" in ex71
    ex72 = (GOLDEN / "ex7.2.txt").read_text(encoding="utf-8")
    assert [line.split("|V_X(F)| = ")[1].split(",")[0] for line in ex72.splitlines()] == \
        ["1", "6", "9", "10"]
    ex74 = (GOLDEN / "ex7.4.txt").read_text(encoding="utf-8")
    assert "fp(d,1)    | 4 1 1" in ex74 and "delta(d,1) | 4 2 1" in ex74


def test_params_tables():
    code, out = run(["params"] + EX71)
    assert code == 0
    assert "H(d) |  3  6  9 12 13" in out and "deg = 13, reg = 5" in out
    code, out = run(["params", "--field", "2", "--family", "projective-space", "--s", "3"])
    assert "H(d) | 3 6 7" in out and "deg = 7" in out
    code, out = run(["params", "--field", "3", "--family", "torus", "--s", "3",
                     "--format", "json"])
    assert json.loads(out)["length"] == 4


def test_config_roundtrip():
    code, out = run(["params"] + EX71 + ["--format", "json"])
    data = json.loads(out)
    cfg = data["config"]
    assert RunConfig.from_json(json.dumps(cfg)) == RunConfig(**cfg)
    code2, out2 = run(["params", "--config", json.dumps(cfg)])
    assert json.loads(out2) == data


def test_footprint_and_weights_commands():
    code, out = run(["footprint"] + EX71)
    assert out == (GOLDEN / "ex7.3.txt").read_text(encoding="utf-8")
    code, out = run(["weights"] + EX71 + ["--ranks", "1-1"])
    assert [line.split()[1] for line in out.splitlines()[1:]] == ["8", "4", "3", "1", "1"]
    code, out = run(["weights"] + EX71 + ["--degrees", "1-1", "--format", "csv"])
    assert out.splitlines()[1].split(",")[4] == "inf"


def test_strict_budget_exit_code():
    code, _ = run(["weights"] + EX71 + ["--degrees", "3-4", "--ranks", "1-6", "--budget", "1",
                                        "--strict"])
    assert code == 3
    code, _ = run(["weights"] + EX71 + ["--degrees", "3-4", "--ranks", "1-6", "--budget", "1"])
    assert code == 0


def test_zeros_command():
    code, out = run(["zeros"] + EX71 + ["t1-t2", "t1-t3"])
    assert code == 0 and "|V_X(F)| = 1" in out
    code, out = run(["zeros", "--field", "4", "--family", "affine-cartesian", "--factors",
                     '[["0","1"],"all"]', "t3"])
    assert "|V_X(F)| = 0" in out
    code, _ = run(["zeros"] + EX71 + ["0"])
    assert code == 1
    code, _ = run(["zeros"] + EX71 + ["t1 + * t2"])
    assert code == 1


def test_bad_inputs():
    assert run(["params", "--field", "6", "--family", "torus", "--s", "3"])[0] == 1
    assert run(["params", "--field", "4", "--family", "nested-cartesian"])[0] == 1
    with pytest.raises(SystemExit):
        main(["params", "--factors", "{not json"])


def test_verify_small_ranges():
    code, out = run(["verify", "--max-prod", "60", "--lemma-max-prod", "40", "--max-sum", "10",
                     "--sizes", "2,2,4", "--sizes", "2,3"])
    assert code == 0
    assert out.count("0 violations") == 3
    assert "consistency triangle (2, 2, 4): d=1..5 -> 12 7 4 3 2: pass" in out
    assert "conjecture refuted at d=4" in out


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "gmdcodes.cli", "reproduce", "ex7.2"],
                         capture_output=True, text=True, check=True).stdout
    assert out == (GOLDEN / "ex7.2.txt").read_text(encoding="utf-8")

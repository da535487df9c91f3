import json
import shlex
import subprocess
import sys

import pytest

from twoparity.cli import main
from twoparity.clusters import ROWS, reduction_type
from twoparity.generators import (
    perturb, perturbation_exponent, real_case_cubic, rng_for, table2_cubic,
)
from twoparity.arith import valuation
from twoparity.verify import CHECKS, VerifyConfig, check_one, run_verify


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generators_are_deterministic():
    a = table2_cubic(rng_for(9, 3, "x"), 7, 2, "I+b")
    b = table2_cubic(rng_for(9, 3, "x"), 7, 2, "I+b")
    assert a == b
    assert real_case_cubic(rng_for(1, 2), 4) == real_case_cubic(rng_for(1, 2), 4)


def test_perturbation_stays_congruent():
    f = table2_cubic(rng_for(0, 0), 5, 3, "1n+")
    N = perturbation_exponent(f, 5)
    g = perturb(rng_for(0, 1), f, 5)
    for u, w in zip(f.coeffs, g.coeffs):
        assert u == w or valuation(u - w, 5) >= N
    assert reduction_type(g, 5).row == "1n+"


@pytest.mark.parametrize("check", CHECKS)
def test_each_check_passes_small_batch(check):
    s = run_verify(VerifyConfig(seed=3, count=21, check=check))
    assert s.ok, s.to_text()
    assert s.checked == 21


def test_force_options():
    s = run_verify(VerifyConfig(seed=1, count=20, force_case=4))
    assert s.ok and s.tallies == {"real case 4": 20}
    for row in ROWS:
        s = run_verify(VerifyConfig(seed=1, count=12, force_type=row))
        assert s.ok and s.tallies == {f"row {row}": 12}


def test_worker_count_does_not_change_output():
    one = run_verify(VerifyConfig(seed=5, count=40, check="identity")).to_json()
    three = run_verify(VerifyConfig(seed=5, count=40, check="identity", workers=3)).to_json()
    assert json.dumps(one) == json.dumps(three)


def test_bad_config():
    with pytest.raises(ValueError):
        VerifyConfig(check="nope")
    with pytest.raises(ValueError):
        VerifyConfig(force_type="I+c")


def test_cli_local_example(capsys):
    code, out, _ = run(["local", "(x-17)(x-1)(x-2)", "--place", "17", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert (data["w_E"], data["w_JacEprime"], data["lambda"], data["H"]) == (1, -1, -1, 1)
    assert data["payload"]["type"] == "1_1^+" and data["identity"] is True


def test_cli_exit_codes(capsys):
    assert run(["local", "0,1,1", "--place", "2"], capsys)[0] == 3
    assert run(["local", "x^3+x+", "--place", "3"], capsys)[0] == 2
    assert run(["local", "(x-1)^2(x-3)", "--place", "3"], capsys)[0] == 2
    assert run(["local", "1,2,3", "--place", "4"], capsys)[0] == 2
    assert run(["global", "(x-1)(x-2)(x-3)"], capsys)[0] == 3
    assert run(["global", "(x-17)(x-1)(x-2)", "--mode", "inferred"], capsys)[0] == 0
    assert run(["render", "(x-5)(x-1)(x-6)", "--place", "5"], capsys)[0] == 3
    assert run(["sturm", "x^4+x+1"], capsys)[0] == 3
    assert run(["frobnicate"], capsys)[0] == 2


def test_cli_render(capsys):
    assert run(["render", "(x-17)(x-1)(x-2)", "--place", "17"], capsys)[1].strip() == "((* o)_1 o o)_0"
    assert run(["render", "x^3+x+1", "--place", "5"], capsys)[1].strip() == "(* o o o)_0"
    assert run(["render", "(x+1)(x+2)(x-1)", "--place", "real"], capsys)[1].strip() == "o < o < * < o"


def test_cli_sturm_and_mobius(capsys):
    code, out, _ = run(["sturm", "(x-1)(x-2)(x-3)(x-4)", "--at", "0,inf", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["roots_in_interval"] == 4 and data["chain"][-1] == "9/16"
    code, out, _ = run(["mobius", "(x-1)(x-2)(x-3)", "6,3,2", "--json"], capsys)
    data = json.loads(out)
    assert data["branch"] == "XfForm" and data["A"] == "0" and data["model"]["d"] == -1


def test_cli_verify_json_is_byte_stable(capsys):
    argv = ["verify", "--seed", "2", "--count", "15", "--check", "scaling", "--json"]
    first = run(argv, capsys)[1]
    second = run(argv + ["--workers", "2"], capsys)[1]
    assert first == second


def test_failure_lines_replay_as_local_commands(capsys, monkeypatch):
    # force a failure by corrupting the table lookup, then replay the printed command
    import twoparity.verify as verify
    monkeypatch.setitem(verify.TABLE_1, 1, (2, 2, 4, 2, 1, 1, 1))
    res = check_one(VerifyConfig(seed=0, count=1, force_case=1), 0)
    assert res.failures
    replay = res.failures[0]["replay"]
    argv = shlex.split(replay)
    assert argv[0] == "twoparity"
    monkeypatch.undo()
    assert run(argv[1:], capsys)[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twoparity", "local", "0,1,1", "--place", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "H = +1" in proc.stdout

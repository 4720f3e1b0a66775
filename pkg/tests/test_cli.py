import json
import math

from bstar.cli import run
from bstar.intsets import IntSet, is_bstar


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out.splitlines()[-1])


def test_verify_pass_and_fail(capsys):
    code, obj = run_json(capsys, ["verify", "--set", "1,2,5,7", "--g", "2"])
    assert code == 0 and obj["max_rep"] == 2 and obj["is_bstar"]
    code, obj = run_json(capsys, ["verify", "--set", "1,2,5,7", "--g", "1"])
    assert code == 1 and not obj["is_bstar"]


def test_verify_modular(capsys):
    code, obj = run_json(capsys, ["verify", "--set", "0,1,2,4", "--modulus", "7",
                                  "--g", "3"])
    assert code == 0 and obj["max_rep"] == 3


def test_usage_error_exit_code(capsys):
    assert run(["verify", "--g", "2"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["bounds"]) == 2
    capsys.readouterr()


def test_search_subcommand(capsys):
    code, obj = run_json(capsys, ["search", "--kind", "integer", "--g", "2",
                                  "--k", "8"])
    assert code == 0 and obj["min_n"] == 35
    witness = IntSet.of(obj["witness"])
    assert is_bstar(witness, 2) and witness.max_element <= 35


def test_search_single_decision(capsys):
    code, obj = run_json(capsys, ["search", "--kind", "modular", "--g", "3",
                                  "--k", "4", "--n", "7"])
    assert code == 0 and obj["feasible"] and obj["witness"] == [0, 1, 2, 4]


def test_bounds_subcommand(capsys):
    code, obj = run_json(capsys, ["bounds", "--rho-lower", "--g", "12"])
    assert code == 0
    assert abs(obj["rho_lower"] - 0.7746) < 1e-4
    code, obj = run_json(capsys, ["bounds", "--zeta-integral"])
    assert abs(obj["zeta_integral"] - math.sqrt(3) / 2) < 1e-9


def test_construct_and_round_trip(capsys):
    code, obj = run_json(capsys, ["construct", "singer", "--p", "2", "--k", "1"])
    assert code == 0 and obj["verified"]
    reloaded = IntSet.of(obj["set"]["elements"], obj["set"]["modulus"])
    assert is_bstar(reloaded, obj["claimed_g"])


def test_construct_half_modular_json_operands(capsys):
    s = IntSet.of([1, 2, 5, 7]).to_json()
    m = IntSet.of([0, 1, 3], 7).to_json()
    code, obj = run_json(capsys, ["construct", "half-modular", "--g", "2",
                                  "--h", "2", "--set-json", s, "--mate-json", m])
    assert code == 0 and obj["verified"] and obj["claimed_g"] == 4


def test_dee_profile_csv(tmp_path, capsys):
    out = tmp_path / "profile.csv"
    code, obj = run_json(capsys, ["dee", "--intervals", "0:1/4,3/4:1",
                                  "--profile-csv", str(out)])
    assert code == 0 and obj["d_value"]["num"] == 1 and obj["d_value"]["den"] == 2
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "center,symmetric_measure"
    assert len(lines) > 3


def test_seeded_random_is_byte_identical(capsys):
    argv = ["random", "integer", "--n", "2000", "--gamma", "20", "--seed", "9",
            "--emit-elements"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    second = capsys.readouterr().out
    assert first == second


def test_table_streams_csv(capsys):
    code = run(["table", "--which", "R", "--max-k", "4", "--g-min", "2",
                "--g-max", "3"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert out[0] == "kind,g,k,min_n,exhaustive,witness"
    rows = [line.split(",") for line in out[1:]]
    cells = {(r[1], r[2]): int(r[3]) for r in rows}
    assert cells[("2", "3")] == 4 and cells[("2", "4")] == 7
    assert cells[("3", "4")] == 5


def test_kernel_eval_small(capsys):
    code, obj = run_json(capsys, ["kernel", "eval", "--family", "K3", "--T", "500",
                                  "--p", "4/3", "--tail-from", "1"])
    assert code == 0
    assert 0.86 < obj["khat0"] < 0.88
    assert 0.20 < obj["tail_norm"] < 0.22


def test_kernel_eval_pwl_file(tmp_path, capsys):
    import numpy as np

    from bstar.kernels import PiecewiseLinearKernel, power_profile, tail_norm

    T = 200
    kernel = PiecewiseLinearKernel.from_profile(power_profile, T)
    path = tmp_path / "nodes.csv"
    np.savetxt(path, np.column_stack([np.arange(T + 1), kernel.y]), delimiter=",")
    code, obj = run_json(capsys, ["kernel", "eval", "--pwl-file", str(path),
                                  "--p", "4/3", "--tail-from", "2"])
    assert code == 0
    assert obj["tail_norm"] == json.loads(json.dumps(obj["tail_norm"]))
    assert abs(obj["tail_norm"] - tail_norm(kernel, 2, 4 / 3).value) < 1e-9


def test_float_rendering_sig_digits(capsys):
    code, obj = run_json(capsys, ["bounds", "--ubiquity", "--gamma", "0.7",
                                  "--alpha", "0.25"])
    assert code == 0
    assert obj["ubiquity_spectral"] > 0.0137382
    # 12 significant digits round-trips through the printed form
    assert obj["ubiquity_spectral"] == float(f"{obj['ubiquity_spectral']:.12g}")

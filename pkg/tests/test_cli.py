from __future__ import annotations

import json
import subprocess
import sys

import pytest

from coxforge.coxcli import main

SMALL = "--window=-4,4,0,8"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_elapsed(text):
    data = json.loads(text)
    data.pop("elapsed_ms", None)
    return data


def test_analyze_cy_generic(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "cy", "--t", "generic", "--seed", "7", SMALL)
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "pass"
    assert data["presentation"]["generators"] == [{"name": "z1", "degree": [-1, 4]},
                                                  {"name": "z2", "degree": [-1, 4]}]
    assert data["window"] == {"a_min": -4, "a_max": 4, "b_min": 0, "b_max": 8}
    assert data["assumed_smooth"] is True


def test_analyze_cy_zero(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "cy", "--t", "0", "--seed", "7", SMALL)
    assert code == 0
    assert json.loads(out)["presentation"]["generators"] == [{"name": "w1", "degree": [-2, 4]}]


def test_analyze_linear(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "linear", "--seed", "7")
    data = json.loads(out)
    assert code == 0
    assert data["instance"]["regular"] is False
    assert data["main_presentation"] == "rejected"
    assert data["free_algebra"]["verdict"] == "pass"


def test_analyze_det(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "det", "--seed", "5")
    data = json.loads(out)
    assert code == 0
    assert data["determinantal"]["hilbert_polynomial"] == ["-20", "13"]
    assert data["determinantal"]["codimension"] == 2
    assert "Cartier" in data["determinantal"]["banner"]
    assert data["assumed_smooth"] is False


def test_analyze_probe_exit_one(capsys, tmp_path):
    csv_path = tmp_path / "dims.csv"
    code, out, _ = run(capsys, "analyze", "--builtin", "probe-duplicated", "--seed", "3", "--csv", str(csv_path))
    assert code == 1
    assert json.loads(out)["verdict"] == "fail"
    assert csv_path.read_text().startswith("a,b,")


def test_analyze_operators_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "koszul", "--d", "2", "--e", "2", "--seed", "11",
                       "--operators", "--cases", "20")
    assert code == 0
    assert json.loads(out)["operators"]["verdict"] == "pass"


def test_analyze_certify(capsys):
    code, out, _ = run(capsys, "analyze", "--builtin", "koszul", "--seed", "11", "--certify")
    assert code == 0
    assert json.loads(out)["regularity"]["certified"] is True


def test_kernels(capsys):
    code, out, _ = run(capsys, "kernels", "--builtin", "cy", "--t", "0", "--seed", "7", "--a", "2", "--b", "4")
    assert code == 0
    assert out.splitlines() == ["dim N(-2,4) = 1", "(0, 1, 0)"]
    code, out, _ = run(capsys, "kernels", "--builtin", "cy", "--seed", "7", "--a", "1", "--b", "4")
    assert out.splitlines() == ["dim N(-1,4) = 2", "(1, 0)", "(0, 1)"]
    code, out, _ = run(capsys, "kernels", "--builtin", "cy", "--seed", "7", "--a", "2", "--b", "3")
    assert out.splitlines() == ["dim N(-2,3) = 0"]


def test_verify_operators_full_sequence(capsys):
    code, out, _ = run(capsys, "verify-operators", "--builtin", "koszul", "--d", "3", "--e", "2", "--seed", "11",
                       "--cases", "40")
    data = json.loads(out)
    assert code == 0
    assert data["zplus"]["verdict"] == "pass" and data["operators"]["mode"] == "full"


def test_verify_operators_probe(capsys):
    code, out, _ = run(capsys, "verify-operators", "--builtin", "probe-duplicated", "--seed", "3", "--cases", "20")
    data = json.loads(out)
    assert code == 1
    assert data["operators"]["mode"] == "containment"
    assert data["operators"]["psi_failures"]


def test_zplus_command(capsys):
    code, out, _ = run(capsys, "zplus", "--builtin", "koszul", "--d", "2", "--seed", "11")
    assert code == 0
    assert json.loads(out)["zplus"]["generator_count"] == 1
    code, _, err = run(capsys, "zplus", "--builtin", "cy", "--t", "0", "--seed", "7")
    assert code == 2 and "full index sequence" in err


def test_instance_file(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text("3,2,2,fp:32003,1\ng0 = y0^2 + y1*y2\ng1 = y2^2 - y3^2\ng2 = y3^2 + y0*y1\n")
    code, out, _ = run(capsys, "analyze", "--instance", str(path), SMALL)
    data = json.loads(out)
    assert code == 0
    assert data["instance"]["seed"] == 1 and data["instance"]["regular"] is True


def test_parse_error_reports_location(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3,2,2,fp\ng0 = y0^2\ng1 = y0 * q1\ng2 = y1^2\n")
    code, _, err = run(capsys, "analyze", "--instance", str(path))
    assert code == 2
    assert "line 3, column 11" in err


@pytest.mark.parametrize("argv", [
    ["analyze", "--builtin", "cy"],
    ["analyze", "--builtin", "cy", "--seed", "1", "--field", "fp:100"],
    ["analyze", "--builtin", "cy", "--seed", "1", "--window", "1,0,0,2"],
    ["kernels", "--builtin", "cy", "--seed", "1"],
    ["kernels", "--builtin", "cy", "--seed", "1", "--a", "0", "--b", "2"],
    ["analyze", "--builtin", "koszul", "--d", "3", "--seq", "0,2", "--seed", "1"],
    ["analyze", "--instance", "/nonexistent/file"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("coxforge:")


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--builtin", "cy", "--instance", "x"])
    assert info.value.code == 2


def test_reports_byte_identical(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        code, _, _ = run(capsys, "verify-operators", "--builtin", "koszul", "--seed", "4", "--cases", "15",
                         "--out", str(path))
        assert code == 0
        outs.append(strip_elapsed(path.read_text()))
    assert outs[0] == outs[1]
    texts = []
    for i in range(2):
        path = tmp_path / f"a{i}.json"
        run(capsys, "analyze", "--builtin", "cy", "--seed", "2", SMALL, "--out", str(path))
        lines = [ln for ln in path.read_text().splitlines() if "elapsed_ms" not in ln]
        texts.append("\n".join(lines))
    assert texts[0] == texts[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxforge", "kernels", "--builtin", "koszul", "--seed", "1",
                           "--a", "1", "--b", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("dim N(-1,2) = 2")

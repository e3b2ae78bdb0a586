import json
import subprocess
import sys

import pytest

from nctoric import lvm, polytope
from nctoric.cli import run
from nctoric.hochschild import ground_field, group_algebra_z2


def invoke(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def parse(out):
    obj = json.loads(out)
    assert set(obj) == {"status", "payload", "diagnostics"}
    assert obj["status"] == "ok"
    return obj


@pytest.fixture
def square_file(tmp_path):
    P = polytope.SimplePolytope([([1, 0], -1), ([-1, 0], -1),
                                 ([0, 1], -1), ([0, -1], -1)])
    path = tmp_path / "square.json"
    path.write_text(json.dumps(polytope.to_json(P)))
    return str(path)


@pytest.fixture
def five_vector_file(tmp_path):
    cfg = lvm.Configuration([[(1, 0)], [(0, 1)], [(0, 1)], [(1, 0)],
                             [(-2, -2)]])
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(lvm.configuration_to_json(cfg)))
    return str(path)


def test_polytope_info(capsys, square_file):
    code, out = invoke(capsys, ["polytope", "info", square_file])
    assert code == 0
    obj = parse(out)
    p = obj["payload"]
    assert p["dim"] == 2
    assert p["classification"] == "IntegralDelzant"
    assert p["f_vector"] == [1, 4, 4]
    assert p["redundant"] == [False, False, False, False]
    assert obj["diagnostics"] == []


def test_polytope_svg(capsys, square_file):
    code, out = invoke(capsys, ["polytope", "svg", square_file])
    assert code == 0
    assert out.startswith("<svg ")
    assert "<!-- exact data:" in out and '"facets"' in out
    assert out.count("<circle") == 4


def test_fan_of_polytope_and_svg(capsys, tmp_path, square_file):
    code, out = invoke(capsys, ["fan", "of-polytope", square_file])
    assert code == 0
    fan_json = parse(out)["payload"]
    path = tmp_path / "fan.json"
    path.write_text(json.dumps(fan_json))
    code, out = invoke(capsys, ["fan", "svg", str(path)])
    assert code == 0
    assert out.startswith("<svg ") and out.count("<line") == 4


def test_fan_classify(capsys, tmp_path):
    path = tmp_path / "cone.json"
    path.write_text(json.dumps({"rays": [["0", "1"], ["2", "-1"]]}))
    code, out = invoke(capsys, ["fan", "classify", str(path)])
    assert code == 0
    assert parse(out)["payload"] == {"class": "Orbifold", "index": 2}


def test_quotient_data(capsys, square_file):
    code, out = invoke(capsys, ["quotient", "data", "--polytope",
                                square_file])
    assert code == 0
    p = parse(out)["payload"]
    assert p["forbidden_strata"] == [[0, 1], [2, 3]]
    assert len(p["nu_P"]) == 2


def test_lvm_subcommands(capsys, five_vector_file):
    code, out = invoke(capsys, ["lvm", "check", "--config",
                                five_vector_file])
    assert code == 0
    assert parse(out)["payload"] == {"siegel": True, "weak_hyperbolic": True}
    code, out = invoke(capsys, ["lvm", "dichotomy", "--config",
                                five_vector_file])
    assert parse(out)["payload"] == {"condition_K": True,
                                     "dichotomy": "CompactTori"}
    code, out = invoke(capsys, ["lvm", "fiber", "--config",
                                five_vector_file])
    p = parse(out)["payload"]
    assert p["torus_rank"] == 4 and p["rational"]
    assert p["slope"] == {"a": "1", "b": "0", "d": 0}
    code, out = invoke(capsys, ["lvm", "polytope", "--config",
                                five_vector_file])
    obj = parse(out)
    assert obj["payload"]["dim"] == 2
    assert obj["diagnostics"] == ["redundant_facet:4"]
    code, out = invoke(capsys, ["lvm", "polytope", "--config",
                                five_vector_file, "--eps", "2,2,2,2,1"])
    assert code == 0 and parse(out)["payload"]["dim"] == 2


def test_hj_expand(capsys):
    code, out = invoke(capsys, ["hj", "expand", "--value", "7/5"])
    assert code == 0
    assert parse(out)["payload"] == {"digits": [2, 2, 3], "finite": True}
    code, out = invoke(capsys, ["hj", "expand", "--value", "sqrt(2)",
                                "--depth", "5"])
    p = parse(out)["payload"]
    assert p["digits"] == [2, 2, 4, 2, 4]
    assert not p["finite"]
    assert p["preperiod_len"] == 1 and p["period"] == [2, 4]


def test_hj_resolve(capsys, tmp_path):
    path = tmp_path / "cone.json"
    path.write_text(json.dumps({"rays": [["0", "1"], ["2", "-1"]]}))
    code, out = invoke(capsys, ["hj", "resolve", "--cone", str(path)])
    assert code == 0
    p = parse(out)["payload"]
    assert p["inserted_rays"] == [[{"a": "1", "b": "0", "d": 0},
                                   {"a": "0", "b": "0", "d": 0}]]
    code, out = invoke(capsys, ["hj", "resolve", "--cone", str(path),
                                "--svg"])
    assert code == 0 and out.startswith("<svg ")


def test_nctorus(capsys):
    code, out = invoke(capsys, ["nctorus", "classify", "--theta", "sqrt(2)"])
    assert code == 0
    assert parse(out)["payload"] == {"class": "DenseLeaves"}
    code, out = invoke(capsys, ["nctorus", "classify", "--theta", "2/3"])
    assert parse(out)["payload"] == {"class": "ClosedLeaves"}
    code, out = invoke(capsys, ["nctorus", "morita", "--theta1", "1/2",
                                "--theta2", "sqrt(2)"])
    assert parse(out)["payload"] == {"commutative_torus": True}
    code, out = invoke(capsys, ["nctorus", "morita", "--theta1", "sqrt(2)",
                                "--theta2", "1+sqrt(2)"])
    p = parse(out)["payload"]
    assert p["equivalent"] and p["witness"] == [[1, 1], [0, 1]]
    code, out = invoke(capsys, ["nctorus", "morita", "--theta1", "sqrt(2)",
                                "--theta2", "sqrt(3)"])
    assert parse(out)["payload"] == {"equivalent": False, "witness": None}


def test_gvec(capsys):
    code, out = invoke(capsys, ["gvec", "--f", "1,6,12,8", "--d", "3"])
    assert code == 0
    p = parse(out)["payload"]
    assert p["h"] == [1, 3, 3, 1] and p["pass"]
    code, out = invoke(capsys, ["gvec", "--f", "1,6,12,7", "--d", "3"])
    assert code == 0 and not parse(out)["payload"]["pass"]


def test_hh(capsys, tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(ground_field().to_json()))
    code, out = invoke(capsys, ["hh", "ranks", "--algebra", str(path)])
    assert code == 0
    assert parse(out)["payload"] == {"ranks": [1, 0, 0, 0]}
    path.write_text(json.dumps(group_algebra_z2().to_json()))
    code, out = invoke(capsys, ["hh", "hp", "--algebra", str(path),
                                "--N", "2"])
    assert parse(out)["payload"] == {"even": 2, "odd": 0, "N": 2}


def test_usage_errors(capsys):
    assert invoke(capsys, ["bogus"])[0] == 2
    assert invoke(capsys, ["nctorus", "morita", "--theta1", "sqrt(2)"])[0] == 2
    assert invoke(capsys, ["hj", "expand"])[0] == 2


def test_input_errors(capsys, tmp_path):
    # decimal literals are rejected
    code, out = invoke(capsys, ["hj", "expand", "--value", "1.4"])
    assert code == 3
    err = json.loads(out)
    assert err["status"] == "error" and err["error"] == "InputError"
    # unreadable file
    code, out = invoke(capsys, ["polytope", "info",
                                str(tmp_path / "missing.json")])
    assert code == 3


def test_domain_errors(capsys, tmp_path):
    code, out = invoke(capsys, ["hj", "expand", "--value", "1/2"])
    assert code == 4
    assert json.loads(out)["error"] == "OutOfRange"
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"facets": [
        {"normal": ["1", "0"], "offset": "1"},
        {"normal": ["-1", "0"], "offset": "1"},
        {"normal": ["0", "1"], "offset": "0"},
        {"normal": ["0", "-1"], "offset": "0"}]}))
    code, out = invoke(capsys, ["polytope", "info", str(path)])
    assert code == 4
    assert json.loads(out)["error"] == "Empty"


def test_byte_determinism(square_file):
    cmd = [sys.executable, "-m", "nctoric.cli", "polytope", "info",
           square_file]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout
            for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
    cmd = [sys.executable, "-m", "nctoric.cli", "polytope", "svg",
           square_file]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]

import json
import logging
import subprocess
import sys

import pytest

from closed_forms import T29
from cfknu.builders import staircase_corners, torus, unknot
from cfknu.cli import main
from cfknu.complex import tau
from cfknu.io import (
    SchemaError,
    complex_from_dict,
    dumps,
    parse,
    profile_from_dict,
    profile_to_dict,
    serialize,
)
from cfknu.invariants import profile


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(path, doc):
    path.write_text(json.dumps(doc))
    return path


@pytest.fixture
def t29_file(tmp_path, capsys):
    path = tmp_path / "t29.json"
    assert run(capsys, "build", "torus", "--p", 2, "--q", 9, "-o", path)[0] == 0
    return path


def test_invariants_table(t29_file, capsys):
    code, out, _ = run(capsys, "invariants", t29_file, "--n-min", -5, "--n-max", 3)
    assert code == 0
    lines = out.splitlines()
    assert lines[:4] == [
        "# tau=4",
        "# nu_plus=4 (n_used=1, verified=true)",
        "# nu_plus_prime=0",
        "n\tnu_n\tmonotone_flag",
    ]
    table = {int(n): int(v) for n, v, _ in (l.split("\t") for l in lines[4:])}
    assert table == T29


def test_nu_and_tau_commands(t29_file, capsys):
    assert run(capsys, "nu", t29_file, "--n", -2)[:2] == (0, "1\n")
    assert run(capsys, "tau", t29_file)[:2] == (0, "4\n")
    assert run(capsys, "check", t29_file)[:2] == (0, "valid\n")


def test_unknot_invariants_all_zero(tmp_path, capsys):
    path = tmp_path / "u.json"
    run(capsys, "build", "unknot", "-o", path)
    code, out, _ = run(capsys, "invariants", path)
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines()[4:]]
    assert [int(r[0]) for r in rows] == list(range(-8, 9))
    assert {r[1] for r in rows} == {"0"}


def test_json_profile_round_trip(t29_file, capsys):
    code, out, _ = run(capsys, "invariants", t29_file, "--format", "json", "--n-min", -3, "--n-max", 3)
    assert code == 0
    doc = json.loads(out)
    assert profile_to_dict(profile_from_dict(doc)) == doc
    assert {e["n"]: e["nu_n"] for e in doc["entries"]} == {n: T29[n] for n in range(-3, 4)}


def test_cli_is_deterministic(t29_file, capsys):
    first = run(capsys, "invariants", t29_file, "--n-min", -4, "--n-max", 2)
    second = run(capsys, "invariants", t29_file, "--n-min", -4, "--n-max", 2)
    assert first == second


def test_round_trip(corpus, tmp_path):
    for c in corpus:
        path = tmp_path / "c.json"
        serialize(c, path)
        back = parse(path)
        assert back == c
        assert dumps(back) == path.read_text()


def test_negative_u_power_is_schema_error(tmp_path, capsys):
    path = write(
        tmp_path / "bad.json",
        {"name": "bad", "generators": [{"id": "x", "alexander": 0, "maslov": 0}], "differential": [{"from": "x", "to": "x", "u_power": -1}]},
    )
    code, _, err = run(capsys, "check", path)
    assert code == 2
    assert "u_power" in err


def test_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run(capsys, "tau", path)[0] == 2
    assert run(capsys, "tau", tmp_path / "missing.json")[0] == 2


def test_d_squared_is_validation_failure(tmp_path, capsys):
    doc = {
        "name": "chain",
        "generators": [
            {"id": "x", "alexander": 0, "maslov": 0},
            {"id": "y", "alexander": 0, "maslov": -1},
            {"id": "z", "alexander": 0, "maslov": -2},
        ],
        "differential": [{"from": "x", "to": "y", "u_power": 0}, {"from": "y", "to": "z", "u_power": 0}],
    }
    code, _, err = run(capsys, "check", write(tmp_path / "d2.json", doc))
    assert code == 1
    assert "DSquaredNonzero" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["build", "torus", "--p", "3", "--q", "7", "-o", "x.json"],
        ["build", "staircase", "--steps", "1,x", "-o", "x.json"],
        ["invariants", "f.json", "--n-min", "3", "--n-max", "1"],
        ["nu", "f.json"],
    ],
)
def test_usage_errors(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "f.json").write_text(dumps(unknot()))
    assert run(capsys, *argv)[0] == 3


def test_box_sum_mirror_tensor_commands(tmp_path, capsys, t29_file):
    box = tmp_path / "box.json"
    assert run(capsys, "build", "box", "--alexander", 1, "-o", box)[0] == 0
    assert json.loads(box.read_text())["allow_non_knot"] is True
    summed = tmp_path / "sum.json"
    assert run(capsys, "sum", t29_file, box, "-o", summed)[0] == 0
    assert len(parse(summed)) == 13
    code, out, _ = run(capsys, "nu", summed, "--n", -2)
    assert (code, out) == (0, "1\n")
    # two boxes do not make a knot
    assert run(capsys, "sum", box, box, "-o", tmp_path / "bb.json")[0] == 1

    mir = tmp_path / "m.json"
    assert run(capsys, "mirror", t29_file, "-o", mir)[0] == 0
    assert run(capsys, "tau", mir)[1] == "-4\n"
    tri = tmp_path / "t.json"
    run(capsys, "build", "thin", "--tau", 1, "-o", tri)
    prod = tmp_path / "p.json"
    assert run(capsys, "tensor", tri, tri, "-o", prod)[0] == 0
    assert run(capsys, "tau", prod)[1] == "2\n"
    stair = tmp_path / "s.json"
    assert run(capsys, "build", "staircase", "--steps", "1,3,2,2,3,1", "-o", stair)[0] == 0
    assert run(capsys, "tau", stair)[1] == "6\n"


def test_positions_are_translated():
    """T(2,9) transcribed from drawn lattice positions and no explicit U powers."""
    corners = staircase_corners([1] * 8)
    ref = torus(2, 9)
    gens = [
        {"id": g.id, "maslov": g.maslov + 2 * i, "position": [i, j]} for g, (i, j) in zip(ref.generators, corners)
    ]
    diff = [{"from": t.source, "to": t.target} for t in ref.differential]
    c = complex_from_dict({"name": "T(2,9)", "generators": gens, "differential": diff})
    assert c == ref
    assert tau(c) == 4


def test_position_inconsistency_rejected():
    doc = {
        "name": "x",
        "generators": [{"id": "a", "maslov": 0, "position": [0, 1], "alexander": 0}],
        "differential": [],
    }
    with pytest.raises(SchemaError):
        complex_from_dict(doc)


def test_duplicate_terms_warn(caplog):
    doc = json.loads(dumps(torus(2, 3)))
    doc["differential"] += doc["differential"][:1] * 2
    with caplog.at_level(logging.WARNING):
        c = complex_from_dict(doc)
    assert "mod 2" in caplog.text
    assert c == torus(2, 3)


def test_module_entry_point(tmp_path):
    path = tmp_path / "u.json"
    path.write_text(dumps(unknot()))
    res = subprocess.run([sys.executable, "-m", "cfknu", "tau", str(path)], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "0\n"

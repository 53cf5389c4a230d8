import io
import json
import subprocess
import sys

import pytest

from gl2hopf import __version__, cli, hopf
from gl2hopf.report import Report


def call(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


def by_name(doc):
    return {r["name"]: r for r in doc["results"]}


def test_json_envelope():
    code, doc = call_json("verify", "hopf", "--group", "gl2", "--ring", "Z")
    assert code == 0
    assert set(doc) == {"command", "params", "results", "version"}
    assert doc["command"] == "verify" and doc["version"] == __version__
    assert doc["params"] == {"target": "hopf", "group": "gl2", "ring": "Z", "carrier": "g"}
    assert all(r["status"] == "pass" for r in doc["results"])


def test_output_is_byte_identical_on_repeat():
    argv = ("character", "--d", "4", "--refined", "--json")
    assert call(*argv) == call(*argv)


def test_character_refined_d3():
    code, doc = call_json("character", "--d", "3", "--refined")
    assert code == 0
    r = by_name(doc)
    assert r["block 0"]["details"]["character"] == "x1^3 + x2^3"
    assert r["block 1"]["details"]["character"] == "x1^2*x2^1 + x1^1*x2^2"
    assert r["block 0"]["details"]["basis"] == ["e1^3", "e2^3"]


def test_character_plain():
    code, text = call("character", "--d", "2")
    assert code == 0 and text.startswith("character: pass")


@pytest.mark.parametrize("group", ["gl2", "sl2"])
@pytest.mark.parametrize("carrier", ["g", "n", "t"])
def test_verify_hopf(group, carrier):
    assert call("verify", "hopf", "--group", group, "--carrier", carrier)[0] == 0


def test_verify_comodule_over_f2():
    assert call("verify", "comodule", "--comodule", "dual:sym3", "--ring", "F2", "--carrier", "n")[0] == 0


def test_iso_not_isomorphic_over_z():
    code, doc = call_json("iso", "--left", "sym2", "--right", "symtensor2", "--ring", "Z", "--carrier", "g")
    assert code == 0
    v = by_name(doc)["verdict"]["details"]
    assert v["verdict"] == "not isomorphic" and v["witness"] is None
    assert "2 is not a unit" in v["reason"]


def test_iso_over_q_has_witness():
    code, doc = call_json("iso", "--left", "symtensor2", "--right", "sym2", "--ring", "Q")
    assert code == 0
    v = by_name(doc)["verdict"]["details"]
    assert v["verdict"] == "isomorphic"
    assert v["witness"] == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]


def test_adjoint_weights():
    code, doc = call_json("adjoint", "--restrict", "t")
    assert code == 0
    assert sorted(map(tuple, by_name(doc)["weights"]["details"])) == [(-1, 1), (0, 0), (0, 0), (1, -1)]


def test_points():
    code, doc = call_json("points", "--group", "n", "--mod", "3", "--verify", "law")
    assert code == 0
    assert by_name(doc)["enumerated"]["details"]["order"] == 8


def test_bracket_table():
    code, doc = call_json("bracket-table")
    assert code == 0 and by_name(doc)["[z2, z3]"]["details"] == "z1 - z4"


def test_verify_all():
    code, doc = call_json("verify", "all", "--dmax", "8")
    assert code == 0
    assert len(doc["results"]) == 10


@pytest.mark.parametrize("argv", [
    ("character",),
    ("character", "--d", "-1"),
    ("verify", "nothing"),
    ("verify", "hopf", "--ring", "R"),
    ("iso", "--left", "sym2", "--right", "bogus"),
    ("iso", "--left", "sym2", "--right", "adjoint", "--ring", "Zmod4"),
    ("points", "--group", "gl2", "--mod", "6", "--verify", "normalizer"),
    ("points", "--group", "gl2", "--mod", "1"),
    ("--no-such-flag",),
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_failing_check_exits_1(monkeypatch):
    def broken(h):
        rep = Report("broken")
        rep.add("coassociativity", False)
        return rep

    monkeypatch.setattr(hopf, "verify_hopf_axioms", broken)
    code, text = call("verify", "hopf")
    assert code == 1 and "[FAIL] coassociativity" in text


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gl2hopf", "bracket-table", "--group", "sl2", "--json"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0
    assert json.loads(p.stdout)["params"] == {"group": "sl2"}

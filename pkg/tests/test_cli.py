import json
import re
import subprocess
import sys

import pytest

from coxcone.cli import main
from coxcone.defcone import fundamental_coweight_support
from coxcone.submod import SupportFunction, setting


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_info_C3(capsys):
    code, out = run(capsys, "info", "C", "3")
    assert code == 0
    assert (out["weyl_order"], out["rays"], out["facets"]) == (48, 26, 48)
    assert out["walls"] == 72 and out["facet_formula"] == 48
    assert out["dynkin"] == [[1, 2, 3], [2, 3, 4]]


def test_info_dihedral_and_exceptional(capsys):
    code, out = run(capsys, "info", "I", "2", "--m", "5")
    assert code == 0 and out["rootsystem"] == "I2(5)" and not out["crystallographic"]
    assert "facet_formula" not in out
    code, out = run(capsys, "info", "H", "3")
    assert out["weyl_order"] == 120 and out["cartan"][1][2] == "(-1-1r5)/2"


def test_facets_listing(capsys):
    code, out = run(capsys, "facets", "A", "2")
    assert code == 0 and out["count"] == 6 == len(out["facets"])
    assert {f["generator"] for f in out["facets"]} == {1, 2}


def test_check_member_and_violation(capsys, tmp_path):
    st = setting("A", 2)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(fundamental_coweight_support(st.fan, 0).to_json()))
    code, out = run(capsys, "check", "A", "2", "-f", str(good))
    assert code == 0 and out["member"] and out["oracle"] == "local"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(SupportFunction(st.fan, [-1] * 6).to_json()))
    code, out = run(capsys, "check", "A", "2", "-f", str(bad))
    assert code == 1 and not out["member"] and out["slack"] == "-1"
    code, out = run(capsys, "check", "A", "2", "-f", str(bad), "--global")
    assert code == 1 and len(out["violated_pair"]) == 2


def test_check_fundamental(capsys):
    code, out = run(capsys, "check", "B", "3", "--fundamental", "2")
    assert code == 0 and out["member"]


def test_vertices_ambient(capsys):
    code, out = run(capsys, "vertices", "C", "3", "--fundamental", "1", "--ambient")
    assert code == 0 and out["count"] == 6
    assert sorted(out["ambient"]) == sorted(
        [["1", "0", "0"], ["-1", "0", "0"], ["0", "1", "0"], ["0", "-1", "0"],
         ["0", "0", "1"], ["0", "0", "-1"]])


def test_vertices_ambient_needs_classical(capsys):
    code, out = run(capsys, "vertices", "G", "2", "--fundamental", "1", "--ambient")
    assert code == 2 and "classical" in out["error"]


def test_weightpoly_point_moves_to_dominant(capsys):
    code, a = run(capsys, "weightpoly", "A", "2", "--point=-1,-1")
    assert code == 0
    code, b = run(capsys, "weightpoly", "A", "2", "--point", "1,1")
    assert a == b
    assert {v["h"] for v in a["values"]} == {"1"}


def test_weightpoly_round_trips_into_check(capsys, tmp_path):
    code, out = run(capsys, "weightpoly", "H", "3", "--fundamental", "2")
    path = tmp_path / "h.json"
    path.write_text(json.dumps(out))
    code, out = run(capsys, "check", "H", "3", "-f", str(path))
    assert code == 0 and out["member"]


def test_indecomposable(capsys):
    code, out = run(capsys, "indecomposable", "C", "3", "--fundamental", "1")
    assert code == 0
    assert out["nef_dimension"] == 1 and out["indecomposable"] and out["predicted_indecomposable"]
    code, out = run(capsys, "indecomposable", "C", "3", "--fundamental", "3")
    assert out["nef_dimension"] == 3 and not out["indecomposable"]
    code, out = run(capsys, "indecomposable", "H", "3", "--fundamental", "1")
    assert out["only_triangular_2faces"] and "predicted_indecomposable" not in out


def test_matroid_check(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"parabolic": [2], "members": "all"}))
    code, out = run(capsys, "matroid-check", "A", "2", "-f", str(path))
    assert code == 0 and out == {"matroid": True, "points": 3, "edges": 3}
    path.write_text(json.dumps({"parabolic": [2], "members": ["e", "s2s1"]}))
    code, out = run(capsys, "matroid-check", "A", "2", "-f", str(path))
    assert code == 0 and out["matroid"]


def test_matroid_check_negative(capsys, tmp_path):
    # opposite vertices of the octahedron in A3 are joined by a non-root segment
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"parabolic": [1, 3], "members": ["e", "s2s1s3s2"]}))
    code, out = run(capsys, "matroid-check", "A", "3", "-f", str(path))
    assert code == 1 and not out["matroid"] and len(out["violating_edge"]) == 2


@pytest.mark.parametrize("argv, fragment", [
    (["info", "E", "7"], "E7"),
    (["info", "Q", "2"], "unknown family"),
    (["info", "I", "2", "--m", "9"], "I2(m)"),
    (["info", "B", "4", "--wcap", "10"], "10"),
    (["check", "A", "2"], "support function is required"),
    (["check", "A", "2", "--fundamental", "5"], "between 1 and 2"),
    (["check", "A", "2", "-f", "/nonexistent/file.json"], "cannot read"),
    (["weightpoly", "A", "2"], "exactly one"),
    (["weightpoly", "A", "2", "--point", "1"], "2 coordinates"),
    (["weightpoly", "A", "2", "--point", "1,x"], "--point"),
])
def test_usage_errors(capsys, argv, fragment):
    code, out = run(capsys, *argv)
    assert code == 2
    assert fragment in out["error"]


def test_bad_json_file(capsys, tmp_path):
    path = tmp_path / "h.json"
    path.write_text("{\n  \"values\": [")
    code, out = run(capsys, "check", "A", "2", "-f", str(path))
    assert code == 2 and "line 2" in out["error"]


@pytest.mark.parametrize("payload, fragment", [
    ({"parabolic": [5], "members": "all"}, "parabolic"),
    ({"parabolic": [2], "members": []}, "members"),
    ({"parabolic": [2], "members": ["s1x"]}, "members[0]"),
    ({"parabolic": [2], "members": ["s2"]}, "minimal coset"),
    ([1], "top level"),
])
def test_matroid_input_errors(capsys, tmp_path, payload, fragment):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(payload))
    code, out = run(capsys, "matroid-check", "A", "2", "-f", str(path))
    assert code == 2 and fragment in out["error"]


def test_selftest_subset(capsys):
    code = main(["selftest", "--only", "1", "11"])
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert code == 0 and out["passed"]
    assert [r["criterion"] for r in out["results"]] == [1, 11]
    assert re.match(r"\[PASS\] +1\. ", captured.err)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxcone", "info", "A", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rays"] == 6

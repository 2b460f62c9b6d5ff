import csv
import io
import json

import pytest

from z2toric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_count_single_value(capsys):
    code, rows = run_json(capsys, "count", "B", "--m", "10")
    assert code == 0
    assert rows == [{"table": "B", "m": 10, "s": 3, "value": 78}]


def test_count_range_tables_match_listed_values(capsys):
    code, rows = run_json(capsys, "count", "B", "--m", "2", "--max", "10")
    assert code == 0
    assert [r["value"] for r in rows] == [3, 1, 6, 3, 13, 9, 30, 29, 78]
    code, rows = run_json(capsys, "count", "C", "--m", "2", "--max", "12")
    assert code == 0
    assert [r["value"] for r in rows] == [1, 1, 2, 1, 4, 3, 8, 8, 18, 21, 48]
    code, rows = run_json(capsys, "count", "A", "--m", "2", "--max", "5")
    assert code == 0
    assert [r["value"] for r in rows] == [6, 6, 18, 30]


def test_count_scolor(capsys):
    code, rows = run_json(capsys, "count", "A", "--m", "6", "--s", "4")
    assert code == 0
    assert rows[0]["value"] == 732
    code, _ = run(capsys, "count", "C", "--m", "6", "--s", "4")
    assert code == 2


def test_oracle_matches(capsys):
    code, rows = run_json(capsys, "oracle", "--m", "6")
    assert code == 0
    assert all(r["closed_form"] == r["brute_force"] for r in rows)


def test_oracle_capacity_exit(capsys):
    code, _ = run(capsys, "oracle", "--m", "30")
    assert code == 3


def test_charfns_prism(capsys):
    code, rows = run_json(capsys, "charfns", "--space", "prism", "--n", "3")
    assert code == 0
    row = rows[0]
    assert row["labelings"] == 840
    assert row["gl_orbits"] == 5
    assert row["gl_action_free"] is True
    assert row["aut_order"] == 12
    assert row["double_cosets"] == 3


def test_charfns_polygon(capsys):
    code, rows = run_json(capsys, "charfns", "--space", "polygon:5", "--n", "2")
    assert code == 0
    assert rows[0]["labelings"] == 30
    assert rows[0]["gl_orbits"] == 5
    assert rows[0]["double_cosets"] == 1


def test_charfns_rank_mismatch(capsys):
    code, _ = run(capsys, "charfns", "--space", "prism", "--n", "2")
    assert code == 2


def test_charfns_file_space(tmp_path, capsys):
    from z2toric.orbit_spaces import build_polygon, poset_to_text

    path = tmp_path / "square.poset"
    path.write_text(poset_to_text(build_polygon(4)))
    code, rows = run_json(capsys, "charfns", "--space", f"file:{path}", "--n", "2")
    assert code == 0
    assert rows[0]["labelings"] == 18


def test_euler_polygon(capsys):
    code, rows = run_json(capsys, "euler", "--space", "polygon:5")
    assert code == 0
    assert rows[0]["chi_via_faces"] == rows[0]["chi_via_formula"] == -1


def test_euler_cylinder(capsys):
    code, rows = run_json(capsys, "euler", "--space", "cylinder")
    assert code == 0
    assert rows[0]["chi_via_faces"] == rows[0]["chi_via_formula"] == 0


def test_euler_surface_parameters(capsys):
    code, rows = run_json(capsys, "euler", "--genus", "1", "--orientable", "true",
                          "--m", "3")
    assert code == 0
    assert rows[0]["chi_via_faces"] == rows[0]["chi_via_formula"] == -7


def test_euler_rejects_3d_space(capsys):
    code, _ = run(capsys, "euler", "--space", "prism")
    assert code == 2


def test_euler_file_space_with_chi(tmp_path, capsys):
    from z2toric.orbit_spaces import build_polygon, poset_to_text

    path = tmp_path / "hexagon.poset"
    path.write_text(poset_to_text(build_polygon(6)))
    code, rows = run_json(capsys, "euler", "--space", f"file:{path}", "--chi", "1")
    assert code == 0
    assert rows[0]["chi_via_faces"] == rows[0]["chi_via_formula"] == -2


def test_classify_presets(capsys):
    code, rows = run_json(capsys, "classify", "--surface", "torus", "--m", "6")
    assert code == 0
    assert rows[0] == {"surface": "torus", "m": 6, "h": 5, "bracelets": 13,
                       "classes": 65}
    code, rows = run_json(capsys, "classify", "--surface", "rp2", "--m", "5")
    assert code == 0
    assert rows[0]["h"] == 4 and rows[0]["classes"] == 12
    code, rows = run_json(capsys, "classify", "--surface", "disk", "--m", "9")
    assert code == 0
    assert rows[0]["classes"] == 29


def test_classify_custom_h1_file(tmp_path, capsys):
    path = tmp_path / "torus.h1"
    path.write_text("r 2\n0110\n1101\n")  # a transposition and an order-3 element
    code, rows = run_json(capsys, "classify", "--surface", f"custom:{path}",
                          "--m", "6")
    assert code == 0
    assert rows[0]["h"] == 5 and rows[0]["classes"] == 65
    trivial = tmp_path / "trivial.h1"
    trivial.write_text("r 1\n")
    code, rows = run_json(capsys, "classify", "--surface", f"custom:{trivial}",
                          "--m", "5")
    assert code == 0
    assert rows[0]["h"] == 4 and rows[0]["classes"] == 12


def test_cover_census(capsys):
    code, rows = run_json(capsys, "cover", "--m", "5")
    assert code == 0
    assert rows == [{"m": 5, "chi": -1, "orientable": False, "count": 30}]
    code, rows = run_json(capsys, "cover", "--m", "6")
    assert code == 0
    assert {(r["chi"], r["orientable"], r["count"]) for r in rows} == \
        {(-2, False, 60), (-2, True, 6)}


def test_cover_single_coloring(capsys):
    code, rows = run_json(capsys, "cover", "--m", "4", "--lambda", "0,1,0,1")
    assert code == 0
    row = rows[0]
    assert row["chi"] == 0 and row["orientable"] is True
    assert row["components"] == 1 and row["closed"] is True


def test_cover_bad_coloring(capsys):
    code, _ = run(capsys, "cover", "--m", "4", "--lambda", "0,0,1,1")
    assert code == 2
    code, _ = run(capsys, "cover", "--m", "5", "--lambda", "0,1,0,1")
    assert code == 2


def test_unknown_space_is_usage_error(capsys):
    code, _ = run(capsys, "charfns", "--space", "cube", "--n", "3")
    assert code == 2


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["count", "D", "--m", "4"])
    assert exc.value.code == 2


def test_csv_and_json_carry_identical_content(capsys):
    code, out_csv = run(capsys, "charfns", "--space", "polygon:6", "--n", "2",
                        "--format", "csv")
    assert code == 0
    code, rows_json = run_json(capsys, "charfns", "--space", "polygon:6", "--n", "2")
    assert code == 0
    parsed = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(parsed) == len(rows_json) == 1
    for key, value in rows_json[0].items():
        assert parsed[0][key] == str(value)


def test_plain_output_format(capsys):
    code, out = run(capsys, "count", "B", "--m", "4")
    assert code == 0
    assert out.strip() == "table=B  m=4  s=3  value=6"

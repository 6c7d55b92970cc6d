import json
import math

from src.common.export import format_cell, write_csv, write_json


def test_format_cell():
    assert format_cell(True) == "true"
    assert format_cell(0.1) == "0.10000000000000001"
    assert float(format_cell(1 / 3)) == 1 / 3
    assert format_cell("joint") == "joint"


def test_csv_layout(tmp_path):
    path = write_csv(
        tmp_path / "sub" / "table.csv",
        ["u", "ok"],
        [[0.5, True], [0.0, False]],
        {"subcommand": "fig6", "N": 57.0},
    )
    assert path.read_text(encoding="utf-8").splitlines() == [
        "# subcommand = fig6",
        "# N = 57",
        "u,ok",
        "0.5,true",
        "0,false",
    ]


def test_json_is_sorted_and_finite(tmp_path):
    path = write_json(
        tmp_path / "out.json", {"b": 1.0, "a": math.inf, "c": None}
    )
    data = json.loads(path.read_text(encoding="utf-8"))
    assert list(data) == ["a", "b", "c"]
    assert data["a"] == "inf"
    assert data["c"] is None

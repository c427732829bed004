import io
import json

import pytest

from petalknot.cli import main, run
from petalknot.core import PetalPermutation, PlanarDiagramCode, petal_projection_pd
from petalknot.invariants import alexander_from_pd


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_bounds_example():
    code, out, _ = call("bounds", "--r", "3", "--s", "4")
    data = json.loads(out)
    assert code == 0
    assert (data["best_lower"], data["best_upper"], data["tight"]) == (7, 7, True)


def test_theorem1_congruence_failure():
    code, out, err = call("construct", "theorem1", "--r", "3", "--s", "8")
    assert code == 2 and out == ""
    assert "r ≢ 1 (mod s−r)" in err


def test_convert_perm_to_pd():
    code, out, _ = call("convert", "--from", "perm", "--to", "pd", "--input", "1,3,5,2,4")
    assert code == 0
    assert str(alexander_from_pd(PlanarDiagramCode.from_text(out))) == "t - 1 + t^-1"


def test_unknown_subcommand():
    code, _, err = call("frobnicate")
    assert code == 64
    assert "usage:" in err


def test_no_arguments():
    assert call()[0] == 64


def test_help():
    code, out, _ = call("--help")
    assert code == 0 and "construct" in out


def test_bad_flag_is_usage_error():
    assert call("bounds", "--r", "x", "--s", "4")[0] == 2


@pytest.mark.parametrize("kind,args", [
    ("theorem1", ["--r", "3", "--s", "5"]),
    ("surgery-plus", ["--r", "3", "--n", "2"]),
    ("surgery-minus", ["--r", "3", "--n", "2"]),
])
def test_construct_json_round_trip(kind, args):
    code, out, _ = call("construct", kind, *args, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    p = PetalPermutation(tuple(data["heights"]))
    assert data["petals"] == len(p)
    code, back, _ = call("convert", "--to", "perm", "--input", json.dumps(data["grid"]))
    assert back.strip() == p.to_text()


def test_construct_perm_and_mirror():
    _, plain, _ = call("construct", "theorem1", "--r", "2", "--s", "3")
    _, mirror, _ = call("construct", "theorem1", "--r", "2", "--s", "3", "--mirror")
    assert PetalPermutation.from_text(mirror) == PetalPermutation.from_text(plain).mirror()


def test_construct_missing_flag():
    code, _, err = call("construct", "surgery-plus", "--r", "3")
    assert code == 2 and "--n" in err


def test_construct_torus_grid_has_no_perm():
    assert call("construct", "torus-grid", "--r", "2", "--s", "5")[0] == 2
    code, out, _ = call("construct", "torus-grid", "--r", "2", "--s", "5", "--format", "grid")
    assert code == 0 and json.loads(out)["size"] == 7


def test_construct_braid():
    code, out, _ = call("construct", "braid", "--word", "1,1,1", "--format", "json")
    assert code == 0 and json.loads(out)["word"] == [1, 1, 1]


def test_construct_svg():
    code, out, _ = call("construct", "theorem1", "--r", "2", "--s", "3", "--format", "svg")
    assert code == 0 and out.count('class="petal"') == 5


@pytest.mark.parametrize("to", ["perm", "grid", "arc", "gauss", "pd"])
def test_convert_json_round_trip(to):
    code, out, _ = call("convert", "--to", to, "--input", "1,4,7,3,6,2,5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    code, again, _ = call("convert", "--to", to, "--input", out, "--format", "json")
    assert code == 0 and json.loads(again) == data


def test_convert_from_file(tmp_path):
    f = tmp_path / "trefoil.pd"
    f.write_text(petal_projection_pd(PetalPermutation((1, 3, 5, 2, 4))).to_text(), encoding="utf-8")
    code, out, _ = call("invariant", "alexander", "--input", str(f), "--format", "text")
    assert (code, out) == (0, "t - 1 + t^-1\n")


def test_convert_non_petal_grid():
    grid = json.dumps({"x": [2, 3, 4, 5, 1], "o": [1, 2, 3, 4, 5]})
    code, _, err = call("convert", "--to", "perm", "--input", grid)
    assert code == 2 and "petal" in err


def test_invariants():
    _, out, _ = call("invariant", "det", "--input", "1,3,5,2,4")
    assert json.loads(out)["value"] == 3
    _, out, _ = call("invariant", "jones", "--input", "1,3,5,2,4")
    assert json.loads(out)["text"] == "t^-1 + t^-3 - t^-4"


def test_jones_budget_env(monkeypatch):
    monkeypatch.setenv("PETAL_JONES_BUDGET", "5")
    code, _, err = call("invariant", "jones", "--input", "1,3,5,2,4")
    assert code == 2 and "PETAL_JONES_BUDGET" in err
    monkeypatch.setenv("PETAL_JONES_BUDGET", "many")
    assert call("invariant", "jones", "--input", "1,3,5,2,4")[0] == 2


def test_enumerate_csv_and_json():
    code, out, _ = call("enumerate", "--petals", "5", "--output", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("petals,witness,alexander")
    assert len(lines) == 3
    _, out, _ = call("enumerate", "--petals", "5")
    assert json.loads(out)["classes"] == 2


def test_enumerate_budget():
    assert call("enumerate", "--petals", "11")[0] == 2


def test_certify():
    code, out, _ = call("certify", "--target", "torus:2,5", "--max-petals", "7")
    data = json.loads(out)
    assert code == 0 and data["value"] == 7 and data["exact"]


def test_certify_bad_target():
    assert call("certify", "--target", "knot:3_1", "--max-petals", "7")[0] == 2


def test_render_to_file(tmp_path):
    dest = tmp_path / "t.svg"
    code, out, _ = call("render", "--input", "1,3,5,2,4", "--output", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text(encoding="utf-8").count('class="petal"') == 5


def test_render_grid_style():
    _, out, _ = call("render", "--input", "1,3,5,2,4", "--style", "grid")
    assert out.count('class="vertical"') == 5


def test_deterministic_output():
    argv = ["construct", "surgery-plus", "--r", "4", "--n", "3", "--format", "json"]
    assert call(*argv) == call(*argv)


def test_main_uses_argv(monkeypatch, capsys):
    monkeypatch.setattr("sys.argv", ["petal", "bounds", "--r", "2", "--s", "5"])
    assert main() == 0
    assert json.loads(capsys.readouterr().out)["petal_number"] == 7

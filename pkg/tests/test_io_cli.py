import json
import math

import numpy as np
import pytest

from hypan import FiniteMetricSpace, cli, gen_tree_metric, io, log_metric
from hypan.errors import (
    AsymmetricInput,
    DimensionMismatch,
    EmptyCloud,
    NonzeroDiagonal,
    NotSquare,
    ParseError,
)

from conftest import ball_space


def test_matrix_round_trip(tmp_path):
    s = ball_space(12, 0)
    path = tmp_path / "m.csv"
    io.save_distance_matrix(s, str(path))
    back = io.load_distance_matrix(str(path))
    assert np.array_equal(back.dist, s.dist)  # %.17g round-trips float64


def test_matrix_parse_errors(tmp_path):
    def load(text, name):
        p = tmp_path / name
        p.write_text(text)
        return io.load_distance_matrix(str(p))

    with pytest.raises(AsymmetricInput):
        load("0,1\n2,0\n", "asym.csv")
    with pytest.raises(NotSquare):
        load("0,1\n1,0\n2,3\n", "rect.csv")
    with pytest.raises(NonzeroDiagonal):
        load("0.5,1\n1,0\n", "diag.csv")
    with pytest.raises(ParseError) as exc:
        load("0,x\n1,0\n", "bad.csv")
    assert exc.value.line == 1 and exc.value.column == 2
    with pytest.raises(ParseError):
        load("", "empty.csv")


def test_matrix_symmetrizes_tiny_asymmetry(tmp_path):
    p = tmp_path / "near.csv"
    d = 1.0 + 1e-14
    p.write_text(f"0,1\n{d!r},0\n")
    s = io.load_distance_matrix(str(p))
    assert s.dist[0, 1] == s.dist[1, 0] == (1.0 + d) / 2.0


def test_cloud_round_trip(tmp_path):
    from hypan import PointCloud

    cloud = PointCloud(2, np.array([[0.25, -0.5], [0.125, 0.75]]), labels=["a", "b"])
    path = tmp_path / "c.json"
    io.save_point_cloud(cloud, str(path))
    back = io.load_point_cloud(str(path))
    assert np.array_equal(back.points, cloud.points)
    assert back.labels == ["a", "b"]


def test_cloud_errors(tmp_path):
    def load(doc, name):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return io.load_point_cloud(str(p))

    with pytest.raises(DimensionMismatch) as exc:
        load({"dim": 2, "points": [[1.0], [0.0, 0.0]]}, "mismatch.json")
    assert exc.value.point_index == 0
    with pytest.raises(EmptyCloud):
        load({"dim": 2, "points": []}, "empty.json")
    with pytest.raises(ParseError):
        load({"points": [[0.0]]}, "nodim.json")
    with pytest.raises(ParseError):
        load({"dim": 1, "points": [["x"]]}, "nonnum.json")
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        io.load_point_cloud(str(p))


def test_cli_gen_analyze_deterministic(tmp_path):
    cloud = tmp_path / "cloud.json"
    rep1 = tmp_path / "r1.json"
    rep2 = tmp_path / "r2.json"
    assert cli.main(["gen", "--kind", "ball", "--n", "10", "--dim", "3",
                     "--seed", "5", "--out", str(cloud)]) == 0
    args = ["analyze", "--in", str(cloud),
            "--checks", "metric,ptolemy,delta,epsilon,bolicity"]
    assert cli.main(args + ["--report", str(rep1)]) == 0
    assert cli.main(args + ["--report", str(rep2)]) == 0
    assert rep1.read_bytes() == rep2.read_bytes()
    doc = json.loads(rep1.read_text())
    assert doc["axiom"]["perimeter_ok"]
    assert doc["ptolemy"]["is_ptolemy"]
    assert doc["hyperbolicity"]["consistency_ok"]
    assert len(doc["hyperbolicity"]["delta_witness"]) == 4
    assert doc["bolicity"]["r"] == 1.0
    assert len(doc["input_digest"]) == 64


def test_cli_gen_tree_and_lemma22(tmp_path):
    csv = tmp_path / "tree.csv"
    rep = tmp_path / "rep.json"
    assert cli.main(["gen", "--kind", "tree", "--n", "8", "--seed", "2",
                     "--out", str(csv)]) == 0
    assert cli.main(["analyze", "--in", str(csv), "--checks", "lemma22,delta",
                     "--base", "3", "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["lemma22"]["base"] == 3
    assert doc["hyperbolicity"]["delta_star"] <= 1e-12
    assert "ptolemy" not in doc  # unrequested sections stay absent


def test_cli_transform_then_epsilon(tmp_path):
    cloud = tmp_path / "cloud.json"
    csv = tmp_path / "log.csv"
    rep = tmp_path / "rep.json"
    cli.main(["gen", "--kind", "ball", "--n", "12", "--dim", "3",
              "--seed", "1", "--out", str(cloud)])
    assert cli.main(["transform", "--in", str(cloud), "--kind", "log",
                     "--out", str(csv)]) == 0
    assert cli.main(["analyze", "--in", str(csv), "--checks", "epsilon",
                     "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert not doc["hyperbolicity"]["epsilon_unbounded"]
    assert doc["hyperbolicity"]["epsilon_star"] >= 2.0 - 1e-6


def test_cli_input_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("0,1\n2,0\n")
    rep = tmp_path / "rep.json"
    assert cli.main(["analyze", "--in", str(bad), "--report", str(rep)]) == 2
    err = json.loads(capsys.readouterr().err.splitlines()[0])
    assert err["error"] == "AsymmetricInput"
    assert not rep.exists()


def test_cli_expect_ptolemy_failure_exit_1(tmp_path, four_cycle):
    csv = tmp_path / "cycle.csv"
    rep = tmp_path / "rep.json"
    io.save_distance_matrix(four_cycle, str(csv))
    code = cli.main(["analyze", "--in", str(csv), "--checks", "ptolemy",
                     "--expect-ptolemy", "--report", str(rep)])
    assert code == 1
    doc = json.loads(rep.read_text())  # report is still written
    assert not doc["ptolemy"]["is_ptolemy"]


def test_cli_sampled_mode_records_parameters(tmp_path):
    cloud = tmp_path / "cloud.json"
    rep = tmp_path / "rep.json"
    cli.main(["gen", "--kind", "ball", "--n", "15", "--dim", "3",
              "--seed", "9", "--out", str(cloud)])
    assert cli.main(["analyze", "--in", str(cloud), "--checks", "delta",
                     "--mode", "sampled", "--samples", "3000", "--seed", "7",
                     "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    h = doc["hyperbolicity"]
    assert h["mode"] == "sampled"
    assert h["sample_count"] == 3000 and h["seed"] == 7


def test_cli_moebius(tmp_path):
    rep = tmp_path / "rep.json"
    assert cli.main(["moebius", "--a", "0.5,0,0", "--pairs", "200",
                     "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    m = doc["distortion"]
    assert m["pair_count"] == 200
    assert m["max_lower_violation"] <= 1e-10
    assert m["max_upper_violation"] <= 1e-10
    assert m["bound_constant"] == pytest.approx(-math.log(0.75), abs=1e-15)
    # extremal pairs for both bounds are recorded even without violations
    assert len(m["witnesses"]) == 2
    assert all(w[2] <= 1e-10 for w in m["witnesses"])


def test_cli_moebius_bad_a(tmp_path, capsys):
    rep = tmp_path / "rep.json"
    assert cli.main(["moebius", "--a", "0.5,zebra", "--report", str(rep)]) == 2
    err = json.loads(capsys.readouterr().err.splitlines()[0])
    assert err["error"] == "InvalidDimension"


def test_cli_unknown_check(tmp_path, capsys):
    csv = tmp_path / "m.csv"
    io.save_distance_matrix(gen_tree_metric(5, 0), str(csv))
    assert cli.main(["analyze", "--in", str(csv), "--checks", "nope",
                     "--report", str(tmp_path / "r.json")]) == 2

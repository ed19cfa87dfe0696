import json

from forbidtree.cli import main
from forbidtree.geometry import PointSet


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_writes_valid_deterministic_pointset(tmp_path, capsys):
    out = tmp_path / "pts.json"
    code, _, _ = run(capsys, "gen", "--n", "7", "--seed", "2", "--mode", "random",
                     "--out", str(out))
    assert code == 0
    first = out.read_bytes()
    data = json.loads(first)
    PointSet.from_json(data)  # validates general position
    assert data["seed"] == 2 and data["mode"] == "random"
    run(capsys, "gen", "--n", "7", "--seed", "2", "--mode", "random", "--out", str(out))
    assert out.read_bytes() == first


def test_gen_convex_hull_cycle(tmp_path, capsys):
    out = tmp_path / "pts.json"
    run(capsys, "gen", "--n", "7", "--mode", "convex", "--out", str(out))
    from forbidtree.geometry import Edge, edge_depth
    s = PointSet.from_json(json.loads(out.read_text()))
    zero_depth = [
        (a, b) for a in range(7) for b in range(a + 1, 7)
        if edge_depth(s, Edge(a, b)) == 0
    ]
    assert len(zero_depth) == 7


def test_embed_basic_and_svg(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    svg = tmp_path / "drawing.svg"
    run(capsys, "gen", "--n", "7", "--mode", "convex", "--out", str(pts))
    code, out, _ = run(capsys, "embed", "--tree", "spider:7", "--points", str(pts),
                       "--svg", str(svg))
    assert code == 0
    data = json.loads(out)
    assert data["crossings"] == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<line") == 6


def test_embed_single_forbidden(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    forb = tmp_path / "forb.json"
    run(capsys, "gen", "--n", "6", "--mode", "random", "--seed", "3", "--out", str(pts))
    forb.write_text(json.dumps({"edges": [[0, 5]]}))
    code, out, _ = run(capsys, "embed", "--tree", "path:6", "--points", str(pts),
                       "--forbidden", str(forb))
    assert code == 0
    data = json.loads(out)
    assert data["forbidden_avoided"] is True and data["crossings"] == 0


def test_embed_two_forbidden_convex(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    forb = tmp_path / "forb.json"
    run(capsys, "gen", "--n", "6", "--mode", "convex", "--out", str(pts))
    forb.write_text(json.dumps({"edges": [[0, 1], [2, 4]]}))
    code, out, _ = run(capsys, "embed", "--tree", "star:6", "--points", str(pts),
                       "--forbidden", str(forb))
    assert code == 0
    assert json.loads(out)["forbidden_avoided"] is True


def test_embed_rejects_three_forbidden(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    forb = tmp_path / "forb.json"
    run(capsys, "gen", "--n", "6", "--mode", "convex", "--out", str(pts))
    forb.write_text(json.dumps({"edges": [[0, 1], [1, 2], [2, 3]]}))
    code, _, err = run(capsys, "embed", "--tree", "star:6", "--points", str(pts),
                       "--forbidden", str(forb))
    assert code == 2
    assert "3+" in err or "no constructive" in err


def test_embed_invalid_json_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "embed", "--tree", "spider:5", "--points", str(bad))
    assert code == 2
    assert "input error" in err


def test_verify_suite_pass_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    code, _, _ = run(capsys, "verify", "--suite", "conf3", "--n", "5..6",
                     "--out", str(out))
    assert code == 0
    lines = [json.loads(line) for line in out.read_text().splitlines()]
    summary = lines[-1]
    assert summary["summary"] and summary["failures"] == 0
    assert summary["cases"] == len(lines) - 1


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_bounds_values(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10", "--k", "6")
    assert code == 0
    data = json.loads(out)
    assert data == {"blanket_size": 30, "k": 6, "lower": "5", "n": 10, "upper": "40"}
    code, out, _ = run(capsys, "bounds", "--n", "8", "--k", "8")
    data = json.loads(out)
    assert data["lower"] == "4/7" and data["upper"] == "16" and data["blanket_size"] == 8


def test_bounds_rejects_small_k(capsys):
    code, _, err = run(capsys, "bounds", "--n", "10", "--k", "2")
    assert code == 2


def test_search_min(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    run(capsys, "gen", "--n", "5", "--mode", "convex", "--out", str(pts))
    code, out, _ = run(capsys, "search-min", "--points", str(pts), "--k", "5",
                       "--cap", "3")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 3 and len(data["edges"]) == 3


def test_render_round_trip(tmp_path, capsys):
    pts = tmp_path / "pts.json"
    emb = tmp_path / "emb.json"
    forb = tmp_path / "forb.json"
    svg = tmp_path / "out.svg"
    run(capsys, "gen", "--n", "6", "--mode", "convex", "--out", str(pts))
    code, out, _ = run(capsys, "embed", "--tree", "path:6", "--points", str(pts),
                       "--out", str(emb))
    assert code == 0
    forb.write_text(json.dumps({"edges": [[0, 2], [3, 5]]}))
    code, _, _ = run(capsys, "render", "--points", str(pts), "--tree", "path:6",
                     "--embedding", str(emb), "--forbidden", str(forb),
                     "--svg", str(svg))
    assert code == 0
    text = svg.read_text()
    assert text.count("<circle") == 6
    # forbidden edges render dashed, tree edges solid
    assert text.count("stroke-dasharray") == 2
    assert text.count("<line") == 7

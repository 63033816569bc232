import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from pse.cli import main
from pse.io import dumps, load_fixture, read_json

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def fixture_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.json"
        path.write_text(dumps(load_fixture(name)))
        return str(path)

    return write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["gen", "--kind", "points", "--n", "5", "--seed", "1", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_seed_from_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PSE_SEED", "9")
    _, env_out, _ = run(["gen", "--kind", "tree", "--n", "8", "--seed", "1"], capsys)
    monkeypatch.delenv("PSE_SEED")
    _, flag_out, _ = run(["gen", "--kind", "tree", "--n", "8", "--seed", "9"], capsys)
    assert env_out == flag_out
    monkeypatch.setenv("PSE_SEED", "nine")
    assert run(["gen", "--kind", "tree", "--n", "8"], capsys)[0] == 1


def test_gen_cactus_sizes(capsys):
    _, out, _ = run(["gen", "--kind", "cactus", "--n", "12", "--seed", "3"], capsys)
    doc = json.loads(out)

    def lengths(node):
        if node is None:
            return []
        return [node["k"]] + [k for ch in node["children"] for k in lengths(ch)]

    ks = lengths(doc["cactus"])
    assert sum(ks) == 12 and min(ks) >= 3


def test_gen_graph3_degree(capsys):
    _, out, _ = run(["gen", "--kind", "graph3", "--n", "50", "--seed", "4"], capsys)
    doc = json.loads(out)
    deg = [0] * 50
    for u, v in doc["edges"]:
        deg[u] += 1
        deg[v] += 1
    assert max(deg) <= 3
    assert len({tuple(sorted(e)) for e in doc["edges"]}) == len(doc["edges"])


@pytest.mark.parametrize(
    "style,fixture,extra",
    [
        ("rac1-tree", "tree7", []),
        ("rac1-path-cycle", "cycle4", []),
        ("rac1-cactus", "cactus", []),
        ("rac1-2sat", "cycle4", []),
        ("rac2-bracket", "petersen", []),
        ("rac2-matching", "matching", []),
        ("rac2-book", "maxdeg2", []),
        ("rac3", "k4", []),
        ("aac2", "k4", ["--epsilon-deg", "20"]),
        ("aac1", "k4", ["--epsilon-deg", "30"]),
    ],
)
def test_embed_then_verify(style, fixture, extra, fixture_file, tmp_path, capsys):
    inst = fixture_file(fixture)
    out = str(tmp_path / "d.json")
    assert main(["embed", "--style", style, "--graph", inst, "--out", out] + extra) == 0
    assert main(["verify", "--drawing", out, "--style", style, "--instance", inst] + extra) == 0


def test_unsat_fixture_exits_two(fixture_file, capsys):
    code, out, _ = run(["embed", "--style", "rac1-2sat", "--graph", fixture_file("unsat_tree6")], capsys)
    assert code == 2
    assert out.startswith("INFEASIBLE") and "overlaps" in out


def test_decimal_epsilon_gives_lambda_eight(fixture_file, capsys):
    code, out, _ = run(["embed", "--style", "aac1", "--graph", fixture_file("k4"), "--epsilon-deg", "8.13"], capsys)
    assert code == 0 and json.loads(out)["lambda"] == 8


def test_missing_epsilon(fixture_file, capsys):
    code, _, err = run(["embed", "--style", "aac2", "--graph", fixture_file("k4")], capsys)
    assert code == 1 and "--epsilon-deg" in err


def test_tampered_bend(fixture_file, tmp_path, capsys):
    out = tmp_path / "d.json"
    main(["embed", "--style", "rac1-tree", "--graph", fixture_file("tree7"), "--out", str(out)])
    doc = read_json(out)
    x, y = doc["edges"][0]["bends"][0]
    doc["edges"][0]["bends"][0] = [f"{2 * x + 1}/2", y]
    out.write_text(dumps(doc))
    code, text, _ = run(["verify", "--drawing", str(out), "--style", "rac1-tree"], capsys)
    assert code == 1 and "BendOffGrid" in text


def test_restricted_flag_on_rac3(fixture_file, tmp_path, capsys):
    out = str(tmp_path / "d.json")
    main(["embed", "--style", "rac3", "--graph", fixture_file("k4"), "--out", out])
    code, text, _ = run(["verify", "--drawing", out, "--style", "rac3", "--restricted", "--json"], capsys)
    assert code == 1
    assert {v["kind"] for v in json.loads(text)["violations"]} == {"SegmentOffGrid"}


def test_render_one_path_per_edge(fixture_file, tmp_path, capsys):
    d = str(tmp_path / "d.json")
    main(["embed", "--style", "rac3", "--graph", fixture_file("k4"), "--out", d])
    _, svg, _ = run(["render", "--drawing", d], capsys)
    root = ET.fromstring(svg.encode())
    assert root.tag == SVG + "svg"
    assert len(root.findall(f".//{SVG}path")) == 6
    assert len(root.findall(f".//{SVG}circle")) == 4


def test_render_empty_graph(tmp_path, capsys):
    d = tmp_path / "d.json"
    d.write_text(dumps({"lambda": 1, "points": [[1, 2], [2, 1]], "mapping": [0, 1], "edges": []}))
    _, svg, _ = run(["render", "--drawing", str(d)], capsys)
    root = ET.fromstring(svg.encode())
    assert not root.findall(f".//{SVG}path") and len(root.findall(f".//{SVG}circle")) == 2


def test_render_scales_refined_coordinates(tmp_path, capsys):
    plain, refined = tmp_path / "a.json", tmp_path / "b.json"
    base = {"points": [[1, 1], [2, 2]], "mapping": [0, 1]}
    plain.write_text(dumps({**base, "lambda": 1, "edges": [{"u": 0, "v": 1, "bends": [[2, 1]]}]}))
    refined.write_text(dumps({**base, "lambda": 8, "edges": [{"u": 0, "v": 1, "bends": [[16, 8]]}]}))
    _, a, _ = run(["render", "--drawing", str(plain)], capsys)
    _, b, _ = run(["render", "--drawing", str(refined)], capsys)
    assert a == b


def test_oracle_mapped_counts(fixture_file, capsys):
    code, out, _ = run(["oracle", "--task", "mapped", "--graph", fixture_file("cycle4"), "--count"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["feasible"] and doc["witnesses"] >= 1


def test_oracle_min_layers(fixture_file, capsys):
    code, out, _ = run(["oracle", "--task", "min-layers", "--graph", fixture_file("matching")], capsys)
    assert code == 0 and isinstance(json.loads(out)["min_layers"], int)


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as info:
        main(["embed", "--style", "nope", "--graph", "x.json"])
    assert info.value.code == 1
    assert main(["verify", "--drawing", "/nonexistent.json", "--style", "rac"]) == 1


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "pse.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "embed" in proc.stdout

"""Command line interface: formats, schemas, exit codes."""

import json

from qdouble.cli import main
from qdouble.groups import builtin_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_info(capsys):
    code, out, err = run(capsys, "group", "info", "--builtin", "S3")
    assert code == 0
    assert "order 6" in out and "simple objects: 8" in out


def test_subcats_list(capsys):
    code, out, err = run(capsys, "subcats", "list", "--builtin", "Z2")
    assert code == 0
    assert out.startswith("5 fusion subcategories")
    assert out.count("\n") == 6


def test_lattice_dot(capsys):
    code, out, err = run(capsys, "lattice", "export", "--builtin", "Z2",
                         "--format", "dot")
    assert code == 0
    assert out.startswith("digraph lattice {")
    assert 'label="K=0-1;H=0;dim=4;flags=nondeg"' in out
    # Hasse diagram of the 5-element lattice has 6 covering edges
    assert out.count("->") == 6


def test_lattice_json_schema(capsys):
    code, out, err = run(capsys, "lattice", "export", "--builtin", "S3",
                         "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 6 and len(doc["triples"]) == 8
    for node in doc["triples"]:
        assert set(node) >= {"K", "H", "B", "N", "dim", "flags", "index"}
    for a, b in doc["edges"]:
        assert 0 <= a < 8 and 0 <= b < 8


def test_lattice_out_file(tmp_path, capsys):
    target = tmp_path / "lat.json"
    code, out, err = run(capsys, "lattice", "export", "--builtin", "Z4",
                         "--format", "json", "--out", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert len(doc["triples"]) == 15


def test_invariants_semion(tmp_path, capsys):
    bfile = tmp_path / "b.json"
    bfile.write_text(json.dumps({"dlog": [[0, 0], [0, 1]]}))
    code, out, err = run(capsys, "invariants", "--builtin", "Z2",
                         "--cocycle", "cyclic:2,1",
                         "--triple", f"0-1,0-1,{bfile}")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2
    assert doc["flags"] == ["nondegenerate"]
    assert doc["gauss_sum"]["approx"] == {"re": 1.0, "im": 1.0}
    assert abs(doc["central_charge"]["re"] - 2 ** -0.5) < 1e-9


def test_invariants_trivial_pairing(capsys):
    code, out, err = run(capsys, "invariants", "--builtin", "S3",
                         "--triple", "0,0-1-2-3-4-5,trivial")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1 and doc["members"] == [0]


def test_verify_all(capsys):
    code, out, err = run(capsys, "verify", "all", "--builtin", "Z2xZ2")
    assert code == 0
    assert "bijection ok" in out and "verified" in out


def test_verify_twisted(capsys):
    code, out, err = run(capsys, "verify", "all", "--builtin", "Z4",
                         "--cocycle", "cyclic:4,1")
    assert code == 0
    assert "skipped (nontrivial cocycle)" in out


def test_group_file_mult(tmp_path, capsys):
    G = builtin_group("S3")
    gf = tmp_path / "g.json"
    gf.write_text(json.dumps({"name": "S3copy", "mult": [list(r) for r in G.mult]}))
    code, out, err = run(capsys, "group", "info", "--group", str(gf))
    assert code == 0
    assert "S3copy" in out and "order 6" in out


def test_group_file_perm_gens(tmp_path, capsys):
    gf = tmp_path / "g.json"
    gf.write_text(json.dumps({"perm_gens": [[1, 2, 3, 0]]}))
    code, out, err = run(capsys, "subcats", "list", "--group", str(gf))
    assert code == 0
    assert out.startswith("15 fusion subcategories")


def test_cocycle_file_flat(tmp_path, capsys):
    flat = [0] * 8
    flat[7] = 1  # omega(1,1,1) = -1 on Z2
    cf = tmp_path / "c.json"
    cf.write_text(json.dumps({"modulus": 2, "dlog": flat}))
    code, out, err = run(capsys, "subcats", "list", "--builtin", "Z2",
                         "--cocycle", str(cf))
    assert code == 0
    assert out.startswith("5 fusion subcategories")


def test_cocycle_file_invalid(tmp_path, capsys):
    flat = [0] * 27
    flat[26] = 1  # not a cocycle on Z3
    cf = tmp_path / "c.json"
    cf.write_text(json.dumps({"modulus": 3, "dlog": flat}))
    code, out, err = run(capsys, "subcats", "list", "--builtin", "Z3",
                         "--cocycle", str(cf))
    assert code == 1
    assert "verification failure" in err


def test_usage_errors(tmp_path, capsys):
    code, _, err = run(capsys, "group", "info", "--builtin", "NOPE")
    assert code == 2 and "unknown builtin" in err
    code, _, err = run(capsys, "group", "info")
    assert code == 2
    code, _, err = run(capsys, "invariants", "--builtin", "Z2",
                       "--triple", "0-1")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "group", "info", "--group", str(bad))
    assert code == 2
    code, _, err = run(capsys, "group", "info", "--builtin", "Z4",
                       "--cocycle", "cyclic:2,1")
    assert code == 2  # cocycle lives on a different group


def test_non_group_table_fails(tmp_path, capsys):
    gf = tmp_path / "g.json"
    gf.write_text(json.dumps({"mult": [[0, 1], [1, 1]]}))
    code, _, err = run(capsys, "group", "info", "--group", str(gf))
    assert code == 1
    assert "verification failure" in err

import json

import pytest

from diskcover.certificates import parse_certificate
from diskcover.cli import main
from diskcover.hypergraph import complete_hypergraph
from diskcover.io import serialize_graph, serialize_h3


@pytest.fixture
def k8_file(tmp_path):
    path = tmp_path / "k8.h3"
    path.write_text(serialize_h3(complete_hypergraph(8)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_skeleton_and_link(capsys, k8_file):
    code, out, _ = run(capsys, "skeleton", k8_file)
    assert code == 0
    assert out.startswith("#vertices: 0 1 2 3 4 5 6 7")
    code, out, _ = run(capsys, "skeleton", k8_file, "--format", "json")
    assert len(json.loads(out)["vertices"]) == 8
    code, out, _ = run(capsys, "link", k8_file, "0")
    assert code == 0
    assert out.startswith("#vertices:")
    assert "1 2" in out


def test_classify_text_and_json(capsys, tmp_path, k8_file):
    path = tmp_path / "tetra.h3"
    path.write_text(serialize_h3(complete_hypergraph(4)))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert "kind: ClosedSurface" in out
    assert "euler: 2" in out
    code, out, _ = run(capsys, "classify", str(path), "--format", "json")
    doc = json.loads(out)
    assert doc["orientable"] is True


def test_check_disk_paths(capsys, k8_file, tmp_path):
    code, out, _ = run(capsys, "check-disk", k8_file, "--cycle", "0,2,1,3")
    assert code == 0
    empty = tmp_path / "empty.h3"
    empty.write_text(serialize_h3(complete_hypergraph(4)))
    code, _, err = run(capsys, "check-disk", str(empty), "--cycle", "0,1,2,3")
    assert code == 1
    assert "no boundary-inducing disk" in err


def test_coverability_exact_value(capsys, k8_file):
    code, out, _ = run(capsys, "coverability", k8_file, "--cycle", "0,2,1,3",
                       "--exact", "--p", "1/2", "--epsilon", "1/10",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["probability"] == "15/16"
    assert doc["decided_coverable"] is True


def test_admissibility_exit_codes(capsys, tmp_path):
    # triangle w,u,w' plus pendant x on w: exact admissibility is p
    g = tmp_path / "tri.graph"
    g.write_text("0 1\n1 2\n0 2\n0 3\n2 3\n")
    code, out, _ = run(capsys, "admissibility", str(g), "--p2", "0,1,2",
                       "--exact", "--p", "1/2", "--epsilon", "0.6")
    assert code == 0
    code, out, _ = run(capsys, "admissibility", str(g), "--p2", "0,1,2",
                       "--exact", "--p", "1/2", "--epsilon", "0.3")
    assert code == 1


def test_audit_exit_and_error_rows(capsys, tmp_path):
    g = tmp_path / "star.graph"
    g.write_text("0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "audit", str(g))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("graph_id,")
    assert all(l.endswith(",true") for l in lines[1:])

    code, out, _ = run(capsys, "audit", str(g),
                       str(tmp_path / "missing.graph"))
    assert code == 1
    assert any(l.endswith(",error") for l in out.strip().splitlines())


def test_find_verify_round_trip(capsys, tmp_path):
    h = tmp_path / "k12.h3"
    h.write_text(serialize_h3(complete_hypergraph(12)))
    cert_path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "find", str(h), "--target", "sphere",
                       "--p", "0.5", "--epsilon", "0.1", "--seed", "3",
                       "--out", str(cert_path))
    assert code == 0
    cert = parse_certificate(cert_path.read_text())
    assert cert.target == "sphere"

    code, out, _ = run(capsys, "verify", str(h), str(cert_path))
    assert code == 0
    assert "verified" in out
    assert "[ok]" in out


def test_find_failure_exit(capsys, tmp_path):
    h = tmp_path / "k5.h3"
    h.write_text(serialize_h3(complete_hypergraph(5)))
    code, _, err = run(capsys, "find", str(h), "--target", "torus",
                       "--p", "0.5", "--epsilon", "0.1")
    assert code == 1
    assert "stage" in err


def test_verify_failed_vs_malformed(capsys, tmp_path):
    h = tmp_path / "k12.h3"
    h.write_text(serialize_h3(complete_hypergraph(12)))
    cert_path = tmp_path / "cert.json"
    assert main(["find", str(h), "--target", "sphere", "--p", "0.5",
                 "--epsilon", "0.1", "--seed", "3",
                 "--out", str(cert_path)]) == 0
    capsys.readouterr()

    doc = json.loads(cert_path.read_text())
    # break a disk triangle: failed verification, exit 1
    doc["disks"][0][0] = [5, 6, 7]  # disconnects the first disk
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(h), str(bad))
    assert code == 1
    assert "[FAIL]" in out

    # malformed version: exit 2
    doc["cert_version"] = 99
    mal = tmp_path / "mal.json"
    mal.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(h), str(mal))
    assert code == 2
    assert "malformed" in err


def test_gen_models(capsys, tmp_path):
    out_path = tmp_path / "g.h3"
    code, _, _ = run(capsys, "gen", "--model", "gnp3", "--n", "10",
                     "--p", "0.3", "--seed", "5", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text().startswith("#vertices: 0 1")
    code, _, err = run(capsys, "gen", "--model", "gnp3", "--n", "10")
    assert code == 2
    assert "error:" in err
    code, out, _ = run(capsys, "gen", "--model", "clique-pendant", "--n", "16")
    assert code == 0


def test_unreadable_input_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.h3"))
    assert code == 2
    assert "error:" in err


def test_sweep_csv_output(capsys, tmp_path):
    out_path = tmp_path / "rows.csv"
    code, _, _ = run(capsys, "sweep", "--target", "sphere", "--n", "10,12",
                     "--c", "0.5,2", "--trials", "2", "--seed", "7",
                     "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    lines = text.splitlines()
    assert lines[0] == "n,c,p,trial,target,found,stage,seconds"
    assert len(lines) == 9
    # same seed reproduces byte-identical output through the CLI
    out2 = tmp_path / "rows2.csv"
    assert main(["sweep", "--target", "sphere", "--n", "10,12",
                 "--c", "0.5,2", "--trials", "2", "--seed", "7",
                 "--out", str(out2)]) == 0
    capsys.readouterr()
    assert out2.read_text() == text

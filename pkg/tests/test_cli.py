from __future__ import annotations

import json
import subprocess
import sys

import pytest

from actorkit import catalog, io
from actorkit.cli import main
from actorkit.rgraph import one_object


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in ["Z3", "S3", "V4"]:
        p = tmp_path / f"{name}.grp"
        io.write_group(catalog.get(name), p)
        paths[name] = str(p)
    p = tmp_path / "z3zero.rg"
    io.write_rg(one_object(catalog.get("Z3")), p)
    paths["z3zero"] = str(p)
    p = tmp_path / "a3s3.xmod"
    io.write_xmod(dict(catalog.crossed_module_examples())["A3_in_S3"], p)
    paths["a3s3"] = str(p)
    bad = tmp_path / "bad.grp"
    bad.write_text("order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n")
    paths["bad"] = str(bad)
    rel = tmp_path / "bad.rg"
    rel.write_text(io.format_group(catalog.get("Z2")) + "s: 0 0\nt: 0 1\n")
    paths["badrg"] = str(rel)
    return paths


def test_validate(files, capsys):
    code, rep = run(["validate", files["S3"]], capsys)
    assert code == 0
    assert rep["result"] == {"kind": "group", "valid": True, "order": 6}
    assert set(rep) == {"command", "inputs", "result", "cases_checked", "failures", "wall_time_ms"}
    assert rep["wall_time_ms"] is None
    code, rep = run(["validate", files["a3s3"]], capsys)
    assert code == 0 and rep["result"]["orders"] == [3, 6]


def test_validate_names_the_invariant(files, capsys):
    code, rep = run(["validate", files["bad"]], capsys)
    assert code == 1 and rep["result"]["invariant"] == "NotAssociative"
    code, rep = run(["validate", files["badrg"]], capsys)
    assert code == 1 and rep["result"]["invariant"] == "RelationViolated"


def test_missing_path(capsys):
    assert main(["validate", "/nonexistent/file.grp"]) == 1


def test_generic_writes_outputs(files, tmp_path, capsys):
    out = tmp_path / "out"
    code, rep = run(["generic", files["Z3"], "--verify", "--max-base-order", "6", "--out", str(out)], capsys)
    assert code == 0
    assert rep["result"]["total_order"] == 6 and rep["result"]["verified"]
    assert rep["cases_checked"] > 0 and rep["failures"] == []
    assert io.read_group(out / "total.grp").order == 6


def test_rg_classifier_and_actor(files, capsys):
    code, rep = run(["rg-classifier", files["z3zero"], "--verify", "--max-base-order", "3"], capsys)
    assert code == 0 and rep["result"]["base_order"] == 8
    code, rep = run(["actor", files["a3s3"]], capsys)
    assert code == 0
    assert rep["result"]["base_order"] == 36 and rep["result"]["total_groupoid"]


def test_actor_rejects_non_groupoid(tmp_path, capsys):
    p = tmp_path / "s3zero.rg"
    io.write_rg(one_object(catalog.get("S3")), p)
    code, rep = run(["actor", str(p)], capsys)
    assert code == 1 and rep["result"]["error"] == "KernelNotGroupoid"


def test_lattice_commands(files, capsys):
    S3 = catalog.get("S3")
    t12 = S3.index_of((1, 0, 2))
    c = S3.index_of((1, 2, 0))
    code, rep = run(["commutator", files["S3"]], capsys)
    assert code == 0 and rep["result"]["order"] == 3
    code, rep = run(["centralizer", files["S3"], "--of", str(c)], capsys)
    assert rep["result"]["order"] == 3
    code, rep = run(["normalizer", files["S3"], "--of", str(t12)], capsys)
    assert rep["result"]["order"] == 2 and not rep["result"]["normal"]
    code, rep = run(["centralizer", files["S3"], "--of", "none"], capsys)
    assert rep["result"]["order"] == 6
    code, rep = run(["centralizer", files["S3"], "--of", "17"], capsys)
    assert code == 1


def test_laws_command(tmp_path, capsys):
    d = tmp_path / "cat"
    d.mkdir()
    for name in ["1", "Z2", "Z3", "S3"]:
        io.write_group(catalog.get(name), d / f"{name}.grp")
    code, rep = run(["laws", "run", "--catalog", str(d), "--law", "jacobi"], capsys)
    assert code == 0 and rep["result"]["passed"]
    assert rep["result"]["laws"][0]["cases_checked"] == rep["cases_checked"] > 0


def test_report_file_and_timing(files, tmp_path, capsys):
    rp = tmp_path / "r.json"
    assert main(["commutator", files["S3"], "--report", str(rp), "--timing"]) == 0
    rep = json.loads(rp.read_text())
    assert isinstance(rep["wall_time_ms"], int)


def test_determinism_across_jobs(files, tmp_path):
    outs = []
    for jobs in ["1", "3", "1"]:
        rp = tmp_path / f"r{len(outs)}.json"
        main(["generic", files["V4"], "--verify", "--max-base-order", "6", "--jobs", jobs, "--report", str(rp)])
        outs.append(rp.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "actorkit", "validate", files["Z3"]], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["order"] == 3

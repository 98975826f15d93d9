import json
import subprocess
import sys

import pytest

from hopfkit.cli import main
from hopfkit.corpus import build_preset
from hopfkit.hopf import group_hom_map


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_group_decompose(capsys):
    code, doc = run(capsys, "group", "decompose", "--group", "dihedral:12")
    assert code == 0
    assert doc["factors"] == ["cyclic:2", "dihedral:6"] and not doc["purely_non_abelian"]
    assert doc["version"]


def test_group_homs(capsys):
    code, doc = run(capsys, "group", "homs", "--from", "symmetric:3", "--to", "symmetric:3",
                    "--filter", "automorphisms")
    assert code == 0 and doc["count"] == 6 and doc["homs"] is None


def test_group_info(capsys):
    code, doc = run(capsys, "group", "info", "--group", "quaternion:8")
    assert code == 0 and doc["identified"] == "quaternion:8" and len(doc["center"]) == 2


def test_hopf_verify_preset_and_export_round_trip(capsys, tmp_path):
    code, doc = run(capsys, "hopf", "verify", "--preset", "double:symmetric:3")
    assert code == 0 and doc["verified"] and doc["dim"] == 36
    code, doc = run(capsys, "hopf", "export", "--preset", "group:cyclic:3")
    p = tmp_path / "h.json"
    p.write_text(json.dumps(doc))
    code, doc = run(capsys, "hopf", "verify", "--algebra", str(p))
    assert code == 0 and doc["verified"]


def test_hopf_verify_fails_on_corrupted_file(capsys, tmp_path):
    from hopfkit.corpus import corrupt
    H = corrupt(build_preset("group:cyclic:3"))
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(H.to_json()))
    code, doc = run(capsys, "hopf", "verify", "--algebra", str(p))
    assert code == 1 and not doc["verified"]


def test_hopf_fitting(capsys, tmp_path):
    H = build_preset("group:cyclic:6")
    f = group_hom_map(H, H, [(3 * x) % 6 for x in range(6)])
    p = tmp_path / "f.json"
    p.write_text(json.dumps(f.to_json()))
    code, doc = run(capsys, "hopf", "fitting", "--algebra", "group:cyclic:6", "--endo", str(p))
    assert code == 0 and doc["verified"]
    assert sorted(x["dim"] for x in doc["factors"]) == [2, 3]


def test_hopf_krs_and_aut_tensor(capsys):
    code, doc = run(capsys, "hopf", "krs", "--algebra", "group:product:(cyclic:2,symmetric:3)")
    assert code == 0 and doc["dims"] == [2, 6] and doc["prefix_maps_bijective"]
    code, doc = run(capsys, "hopf", "aut-tensor", "--left", "group:cyclic:2", "--right", "group:symmetric:3")
    assert code == 0 and doc["aut_order"] == 12 and doc["A_equal"]


def test_double_verbs(capsys):
    code, doc = run(capsys, "double", "zenthom", "--from", "symmetric:3", "--to", "cyclic:2")
    assert code == 0 and doc["count"] == 4 and doc["complete"]
    code, doc = run(capsys, "double", "enumerate-homs", "--from", "cyclic:2", "--to", "cyclic:2", "--auts")
    assert code == 0 and doc["count"] == 6 and doc["is_group"]
    code, doc = run(capsys, "double", "pna", "--group", "symmetric:3")
    assert code == 0 and doc["agree"] and doc["group"]


def test_double_aut_order_block_with_oracle(capsys):
    code, doc = run(capsys, "double", "aut-order", "--block", "cyclic:2,symmetric:3", "--oracle-aut-h", "12")
    assert code == 0 and doc["total"] == 1152 and doc["autDoubleH_source"] == "oracle"


def test_usage_errors(capsys):
    assert main(["group", "decompose", "--group", "frob:5"]) == 2
    assert main(["hopf", "verify", "--preset", "nope:cyclic:2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["group"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_pretty_output(capsys):
    code, out = run(capsys, "group", "decompose", "--group", "cyclic:6", "--pretty")
    assert code == 0 and "factors" in out and not out.startswith("{")


def test_selftest_fast_is_deterministic_and_detects_corruption():
    cmd = [sys.executable, "-m", "hopfkit", "selftest", "--level", "fast"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
    assert json.loads(a.stdout)["pass"]
    bad = subprocess.run(cmd + ["--corrupt"], capture_output=True, text=True)
    assert bad.returncode == 1 and not json.loads(bad.stdout)["pass"]


def test_reproduce_script():
    import pathlib
    script = pathlib.Path(__file__).resolve().parent.parent / "scripts" / "reproduce_1152.py"
    out = subprocess.run([sys.executable, str(script), "--no-cross-check"], capture_output=True, text=True)
    doc = json.loads(out.stdout)
    assert out.returncode == 0 and doc["order"] == 1152 == doc["formula"]

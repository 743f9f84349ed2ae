import json

import pytest

from wdlat import catalog, latjson
from wdlat.cli import main


@pytest.fixture
def p6_file(tmp_path):
    path = tmp_path / "p6.lat.json"
    latjson.dump(catalog("P6"), str(path), name="P6")
    return str(path)


@pytest.fixture
def m42_file(tmp_path):
    path = tmp_path / "m42.lat.json"
    latjson.dump(catalog("M42"), str(path), name="M42")
    return str(path)


def test_check_ok(p6_file, capsys):
    assert main(["check", p6_file]) == 0
    assert capsys.readouterr().out.strip() == "WDL: all 6 axioms hold"


def test_check_reports_failures(tmp_path, capsys):
    doc = {"name": "bad", "size": 2, "covers": [[0, 1]],
           "delta": [0, 0], "nabla": [1, 1]}
    path = tmp_path / "bad.lat.json"
    path.write_text(json.dumps(doc))
    assert main(["check", str(path)]) == 1
    out = capsys.readouterr().out
    assert "fails at" in out


def test_check_json(p6_file, capsys):
    assert main(["check", "--json", p6_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_hold"] is True
    assert set(doc["axioms"]) == {"1", "2", "3", "1'", "2'", "3'"}


def test_classify_golden_line(m42_file, capsys):
    assert main(["classify", m42_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == ("S-Boolean, not Boolean, not pure; "
                      "S={0,a,b,1} (Boolean), S̄={0,1} (Boolean)")


def test_classify_json(m42_file, capsys):
    assert main(["classify", "--json", m42_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {
        "name": "M42",
        "distributive": True,
        "boolean": False,
        "s_boolean": True,
        "weak_s_boolean": True,
        "pure": False,
        "skeleton": ["0", "a", "b", "1"],
        "dual_skeleton": ["0", "1"],
        "center": ["0", "1"],
        "skeleton_is_boolean": True,
        "dual_skeleton_is_boolean": True,
        "skeleton_is_ortholattice": True,
        "dual_skeleton_is_ortholattice": True,
    }


def test_skeleton(p6_file, capsys):
    assert main(["skeleton", "--json", p6_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["skeleton"] == doc["dual_skeleton"] == ["0", "u", "b", "1"]
    assert doc["center"] == ["0", "u", "b", "1"]


def test_nf(p6_file, capsys):
    assert main(["nf", "--json", p6_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["normal_filters"] == [
        ["1"], ["u", "a", "1"], ["b", "1"], ["0", "u", "v", "a", "b", "1"]]
    assert doc["nf_ni_isomorphic"] is True
    assert doc["semisimple"] is True
    assert sorted(map(tuple, doc["maximal_normal_filters"])) == [
        ("b", "1"), ("u", "a", "1")]


def test_con_chain5_not_si(tmp_path, capsys):
    path = tmp_path / "c5.lat.json"
    assert main(["chain", "5", "-o", str(path)]) == 0
    assert main(["con", "--json", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["subdirectly_irreducible"] is False
    assert doc["monolith"] is None
    assert doc["regular"] is False
    assert doc["count"] == 5


def test_con_chain4(tmp_path, capsys):
    path = tmp_path / "c4.lat.json"
    assert main(["chain", "4", "-o", str(path)]) == 0
    assert main(["con", "--json", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 3
    assert doc["subdirectly_irreducible"] is True
    assert doc["monolith"] == [["0"], ["c1", "c2"], ["1"]]
    assert doc["detcon_is_congruence"] is True


def test_quotient_by_filter(p6_file, capsys):
    assert main(["quotient", p6_file, "--filter", "b,1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["size"] == 3
    assert doc["labels"] == ["{0,u}", "{v,a}", "{b,1}"]


def test_quotient_by_detcon(tmp_path, capsys):
    path = tmp_path / "c6.lat.json"
    assert main(["chain", "6", "-o", str(path)]) == 0
    capsys.readouterr()
    assert main(["quotient", str(path), "--by-detcon"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["size"] == 3


def test_quotient_rejects_non_normal_filter(p6_file, capsys):
    assert main(["quotient", p6_file, "--filter", "a,1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_emitted_documents_reparse(tmp_path, capsys):
    p6 = tmp_path / "p6.lat.json"
    c3 = tmp_path / "c3.lat.json"
    assert main(["catalog", "P6", "-o", str(p6)]) == 0
    assert main(["chain", "3", "-o", str(c3)]) == 0
    prod = tmp_path / "prod.lat.json"
    assert main(["product", str(p6), str(c3), "-o", str(prod)]) == 0
    pw = tmp_path / "pw.lat.json"
    assert main(["power", str(c3), "2", "-o", str(pw)]) == 0
    for path in (p6, c3, prod, pw):
        lf = latjson.load(str(path))
        again = latjson.dumps(lf)
        assert latjson.loads(again).wdl().delta == lf.wdl().delta


def test_catalog_list_and_validate(capsys):
    assert main(["catalog", "--list"]) == 0
    out = capsys.readouterr().out.split()
    assert "P6" in out and "L16" in out
    assert main(["catalog", "--validate"]) == 0
    assert "catalog OK" in capsys.readouterr().out


def test_catalog_unknown_name(capsys):
    assert main(["catalog", "NOPE"]) == 1
    assert "error:" in capsys.readouterr().err


def test_fca_command(tmp_path, capsys):
    cxt = tmp_path / "k.cxt"
    cxt.write_text("B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\n")
    assert main(["fca", "--json", str(cxt)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["concepts"] == 4
    assert doc["algebra"]["size"] == 4


def test_verify_single(p6_file, capsys):
    assert main(["verify", p6_file]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_verify_random(capsys):
    assert main(["verify", "--random", "3", "--seed", "1"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_missing_file_is_domain_error(capsys):
    assert main(["check", "no-such-file.lat.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["quotient", "whatever.lat.json"])  # missing --filter/--by-detcon
    assert err.value.code == 2


def test_quotient_filter_accepts_indices(p6_file, capsys):
    assert main(["quotient", p6_file, "--filter", "4,5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["labels"] == ["{0,u}", "{v,a}", "{b,1}"]


def test_nf_emits_lattice(p6_file, tmp_path, capsys):
    out = tmp_path / "nf.lat.json"
    assert main(["nf", p6_file, "-o", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["size"] == 4
    assert doc["labels"][0] == "{1}"

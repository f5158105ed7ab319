import json

import pytest

from morsetwist.cli import main
from morsetwist.serial import dump_json, facets_to_text
from morsetwist.catalog import RP2_SIX_VERTEX_FACETS, get_example
from morsetwist.cw import FacetList


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_example_rp2_unit_rep(capsys):
    code, out, _ = run(capsys, "homology", "--example", "rp2",
                       "--system", "unit-rep")
    assert code == 0
    assert out.splitlines() == ["H_0 = Z/2", "H_1 = 0", "H_2 = Z"]


def test_homology_genus2_exp(capsys):
    code, out, _ = run(capsys, "homology", "--example", "genus2",
                       "--system", "exp", "--class", "1,0,0,0")
    assert code == 0
    assert out.splitlines() == ["H_0 = 0", "H_1 = R^2", "H_2 = 0"]


def test_homology_circle_exact_class(capsys):
    code, out, _ = run(capsys, "homology", "--example", "circle-std",
                       "--system", "exp", "--class", "0")
    assert code == 0
    assert out.splitlines() == ["H_0 = R", "H_1 = R"]


def test_cohomology_genus2_zero_class(capsys):
    code, out, _ = run(capsys, "cohomology", "--example", "genus2",
                       "--system", "exp", "--class", "0,0,0,0")
    assert code == 0
    assert out.splitlines() == ["H^0 = R", "H^1 = R^4", "H^2 = R"]


def test_novikov_with_zeros(capsys):
    code, out, _ = run(capsys, "novikov", "--example", "genus2",
                       "--class", "1,0,0,0", "--zeros", "1,4,1")
    assert code == 0
    assert "degree 1: b=2 q=0" in out
    assert "slack 1,2,1 -> pass" in out


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", "--example", "genus2")
    assert code == 0
    assert "euler (cells) = -2" in out


def test_obstructions(capsys):
    code, out, _ = run(capsys, "obstructions", "--example", "torus",
                       "--system", "exp", "--class", "1,0")
    assert code == 0
    assert "H_SPACE: clear" in out
    assert "PARALLEL_FORM: clear" in out
    assert "rank of class: 1" in out


def test_json_output_roundtrips_canonically(capsys):
    code, out, _ = run(capsys, "homology", "--example", "rp2",
                       "--system", "trivial", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert json.dumps(obj, indent=2) + "\n" == out
    assert obj["betti"] == [1, 0, 0]
    assert obj["torsion"] == [[], [2], []]


def test_validate_ok_and_fail(tmp_path, capsys):
    good = tmp_path / "rp2.json"
    good.write_text(dump_json(get_example("rp2").datum))
    code, out, _ = run(capsys, "validate", str(good))
    assert code == 0 and out.strip() == "ok"

    # flip one degree-1 flow sign: boundary squared becomes nonzero
    import dataclasses
    d = get_example("rp2").datum
    flows = list(d.flows)
    flows[2] = dataclasses.replace(flows[2], sign=-flows[2].sign)
    bad = tmp_path / "bad.json"
    bad.write_text(dump_json(dataclasses.replace(d, flows=tuple(flows))))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert "FAIL" in out

    ugly = tmp_path / "ugly.json"
    ugly.write_text("{nope")
    code, _, err = run(capsys, "validate", str(ugly))
    assert code == 2


def test_missing_class_is_parse_error(capsys):
    code, _, err = run(capsys, "homology", "--example", "torus",
                       "--system", "exp")
    assert code == 2
    assert "requires --class" in err


def test_unknown_example_exit(capsys):
    code, _, err = run(capsys, "homology", "--example", "nope")
    assert code == 1


def test_from_triangulation(tmp_path, capsys):
    facets = tmp_path / "rp2.facets"
    facets.write_text(facets_to_text(FacetList(6, RP2_SIX_VERTEX_FACETS)))
    out_json = tmp_path / "rp2cw.json"
    code, out, _ = run(capsys, "from-triangulation", str(facets),
                       "-o", str(out_json))
    assert code == 0
    assert "euler 1" in out
    assert "H_1 = Z/2" in out
    assert out_json.exists()
    code, out2, _ = run(capsys, "validate", str(out_json))
    assert code == 0


def test_example_subcommands(tmp_path, capsys):
    code, out, _ = run(capsys, "example", "list")
    assert code == 0 and "genus2" in out

    code, out, err = run(capsys, "example", "show", "circle-std")
    assert code == 0
    obj = json.loads(out)
    assert obj["name"] == "circle-std"
    assert "circle-std" in err  # description goes to stderr

    code, out, _ = run(capsys, "example", "run", "circle-std")
    assert code == 0
    assert all(line.startswith("pass") for line in out.splitlines())


def test_homology_from_file_with_system(tmp_path, capsys):
    path = tmp_path / "torus.json"
    path.write_text(dump_json(get_example("torus").datum))
    code, out, _ = run(capsys, "homology", str(path), "--system", "nov",
                       "--class", "1,0")
    assert code == 0
    assert out.splitlines() == ["H_0 = 0", "H_1 = 0", "H_2 = 0"]

import json
import subprocess
import sys

import pytest

from dihedral_codes.cli import EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY, main
from dihedral_codes.dihedral import code_from_generator, export_generator_matrix
from dihedral_codes.presets import PRESETS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_text(out):
    return dict(line.split(": ", 1) for line in out.splitlines())


def test_construct_binary_path(capsys):
    code, out, _ = run(capsys, "construct", "--q", "2", "--m", "11", "--b", "1", "--delta", "4")
    assert code == EXIT_OK
    rep = parse_text(out)
    assert rep["construction"] == "binary" and rep["n"] == "22"
    assert int(rep["bch_bound"]) >= 4 and rep["d_certified"] == "true"
    assert int(rep["d"]) >= 4


def test_construct_general_fallback(capsys):
    code, out, _ = run(capsys, "construct", "--q", "2", "--m", "7", "--b", "1", "--delta", "3", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["construction"] == "general" and rep["schema"] == 1
    assert rep["d"] >= 3


def test_construct_preconditions(capsys):
    code, _, err = run(capsys, "construct", "--q", "2", "--m", "4", "--b", "1", "--delta", "3")
    assert code == EXIT_PRECONDITION and "NotCoprime" in err
    # the run 0, 1, 2 meets every coset mod 11, so p = x^11 - 1 = 0
    code, _, err = run(capsys, "construct", "--q", "2", "--m", "11", "--b", "0", "--delta", "4")
    assert code == EXIT_PRECONDITION and "DegenerateGenerator" in err
    code, _, err = run(capsys, "construct", "--q", "2", "--m", "11", "--b", "0", "--delta", "12")
    assert code == EXIT_PRECONDITION and "DeltaOutOfRange" in err


def test_analyze_d22(capsys):
    code, out, _ = run(capsys, "analyze", "--q", "2", "--m", "11", "--gen", "1,a^2,1,1,a,1")
    assert code == EXIT_OK
    rep = parse_text(out)
    assert (rep["n"], rep["k"], rep["d"]) == ("22", "12", "6")
    assert rep["dihedral_invariant"] == "true" and rep["char2_containment"] == "true"
    assert rep["principal_guarantee"] == "true" and rep["schema"] == "1"


def test_analyze_d86b_preset(capsys):
    code, out, _ = run(capsys, "analyze", "--preset", "d86b", "--format", "json")
    rep = json.loads(out)
    assert code == EXIT_OK and (rep["n"], rep["k"], rep["d"]) == (86, 72, 5)
    assert rep["d_method"] == "brouwer_zimmermann" and rep["d_certified"]


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--q", "2", "--m", "11", "--gen", "1,c")
    assert code == EXIT_PARSE and "position 2" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--m", "x", "--delta", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--distance-method", "guess"])
    assert exc.value.code == 2


def test_bound_only_method(capsys):
    code, out, _ = run(capsys, "analyze", "--preset", "d22", "--distance-method", "bound-only", "--format", "json")
    rep = json.loads(out)
    assert rep["d"] is None and rep["d_method"] == "bound_only" and rep["bch_bound"] == 4


def test_json_and_text_carry_the_same_numbers(capsys):
    _, text, _ = run(capsys, "analyze", "--preset", "d22")
    _, js, _ = run(capsys, "analyze", "--preset", "d22", "--format", "json")
    t, j = parse_text(text), json.loads(js)
    assert set(t) == set(j)
    for key, v in j.items():
        if isinstance(v, bool):
            assert t[key] == ("true" if v else "false")
        elif v is None:
            assert t[key] == "-"
        else:
            assert t[key] == str(v)


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("DIHEDRAL_CODES_FORMAT", "json")
    _, out, _ = run(capsys, "analyze", "--preset", "d22")
    assert json.loads(out)["k"] == 12


def test_output_file(capsys, tmp_path):
    path = tmp_path / "report.txt"
    code, out, _ = run(capsys, "analyze", "--preset", "d22", "--output", str(path))
    assert code == EXIT_OK and out == ""
    assert "k: 12" in path.read_text()


def test_search_small_range_and_determinism(capsys):
    args = ("search", "--q", "2", "--m-max", "20", "--delta", "4")
    code, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert code == EXIT_OK and first == second
    _, js, _ = run(capsys, *args, "--format", "json")
    rows = json.loads(js)["rows"]
    assert {r["m"] for r in rows} == {3, 9, 11, 19}
    assert [(r["m"], r["delta"], r["b"] if r["b"] is not None else -1) for r in rows] == sorted(
        (r["m"], r["delta"], r["b"] if r["b"] is not None else -1) for r in rows
    )
    gens = [(r["m"], r["generator"]) for r in rows]
    assert len(gens) == len(set(gens))
    for r in rows:
        if r["status"] != "degenerate":
            assert r["d"] >= r["delta"] and r["status"] in ("meets", "beats")
    # text table rows line up with the JSON rows
    assert len(first.splitlines()) == len(rows) + 1


def test_search_empty_range(capsys):
    code, out, _ = run(capsys, "search", "--q", "2", "--m-min", "4", "--m-max", "6", "--delta", "3", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["rows"] == []


def test_export_matches_library(capsys):
    code, out, _ = run(capsys, "export", "--preset", "d22")
    assert code == EXIT_OK
    assert out == export_generator_matrix(code_from_generator(PRESETS["d22"].spec()))
    code, out, _ = run(capsys, "export", "--m", "11", "--b", "3", "--delta", "4")
    assert code == EXIT_OK and len(out.splitlines()) >= 12


def test_verify_single_property_and_canary(capsys):
    code, out, _ = run(capsys, "verify", "--property", "binary-equivalence", "--m-max", "61")
    assert code == EXIT_OK and "{3, 11, 19, 43}" in out and out.startswith("PASS")
    code, out, _ = run(
        capsys, "verify", "--property", "structure", "--scale", "0.05", "--inject-fault", "conjugate-sign"
    )
    assert code == EXIT_VERIFY and "FAIL structure" in out


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "--format", "json")
    assert code == EXIT_OK
    rows = {r["preset"]: r for r in json.loads(out)["rows"]}
    assert rows["d22"]["status"] == "match" and rows["d22"]["computed"] == [22, 12, 6]
    assert rows["d86a"]["status"] == "match" and rows["d86a"]["computed"] == [86, 44, 15]
    assert rows["d86b"]["status"] == "match" and rows["d86b"]["computed"] == [86, 72, 5]
    d66 = rows["d66"]
    assert d66["status"] == "documented-discrepancy"
    assert "k=36 vs claimed 33" in d66["note"] and "= 36" in d66["note"] and "vs claimed 12" in d66["note"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dihedral_codes", "analyze", "--preset", "d22", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["d"] == 6

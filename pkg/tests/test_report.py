import json

from dihedral_codes.presets import KNOWN_DISCREPANCIES, PRESETS
from dihedral_codes.report import analyze


def test_d22_report_fields():
    rep = analyze(PRESETS["d22"].spec())
    d = rep.as_dict()
    assert d["schema"] == 1
    assert (d["n"], d["k"], d["d"], d["d_method"]) == (22, 12, 6, "exhaustive")
    assert d["bch_bound"] == 4 and d["dim_bound"] == 6
    assert d["dihedral_invariant"] and d["dual_dihedral_invariant"] and d["char2_containment"]
    assert json.loads(rep.to_json()) == d
    assert rep.to_text().splitlines()[0] == "schema: 1"


def test_q3_report_has_no_containment_field():
    from dihedral_codes.dihedral import make_spec

    rep = analyze(make_spec(3, 7, "1,2,1"))
    assert rep.char2_containment is None and "char2_containment: -" in rep.to_text()


def test_presets_are_the_printed_polynomials():
    assert PRESETS["d22"].generator == "1,a^2,1,1,a,1"
    degrees = {name: p.spec().generator.degree for name, p in PRESETS.items()}
    assert degrees == {"d22": 5, "d66": 15, "d86a": 21, "d86b": 7}
    assert KNOWN_DISCREPANCIES == {"d66"}


def test_d66_as_printed():
    spec = PRESETS["d66"].spec()
    rep = analyze(spec)
    # rank computation: k equals 2(m - deg p), not the claimed 33
    assert rep.k == 2 * (spec.m - spec.generator.degree) == 36
    assert rep.d_certified and rep.d == 9

"""Small-scale runs of the property suites; full-scale runs live in test_acceptance.py."""

from dihedral_codes import verify


def test_binary_equivalence_small():
    res = verify.binary_equivalence(m_max=61)
    assert res.passed and res.checked == 30
    assert res.primes_below_50 == [3, 11, 19, 43]


def test_bch_soundness_small():
    res = verify.bch_soundness(count=30, seed=11)
    assert res.passed and res.checked + res.skipped == 30


def test_binary_soundness_small():
    res = verify.binary_soundness(ms=(3, 11), delta_max=4)
    assert res.passed and res.checked > 0


def test_structure_small():
    res = verify.structure(count=20, seed=5)
    assert res.passed


def test_distance_oracle_small():
    res = verify.distance_oracle(count=10, seed=8)
    assert res.passed and res.checked == 10


def test_sign_flip_canary_is_caught():
    res = verify.conjugation_exhaustive(conjugate=verify.sign_flipped_conjugate)
    assert not res.passed
    # in characteristic 2 the flip is invisible; odd q must expose it
    assert all(msg.startswith(("q=3", "q=5")) for msg in res.failures)
    assert verify.conjugation_exhaustive().passed

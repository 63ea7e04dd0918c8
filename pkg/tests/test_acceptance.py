"""Acceptance criteria 1-9, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` (the summary is printed either
way) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
import pytest

from dihedral_codes import verify
from dihedral_codes.cli import reproduce_rows
from dihedral_codes.dihedral import LinearCode, code_from_generator
from dihedral_codes.distance import min_distance_bz, min_distance_exhaustive
from dihedral_codes.finite_field import make_field
from dihedral_codes.presets import KNOWN_DISCREPANCIES, PRESETS


@dataclass
class Outcome:
    number: int
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        timing = f"{self.seconds:.2f}s" + (f" (limit {self.limit:g}s)" if self.limit else "")
        return f"criterion {self.number}: {status} {self.detail} [{timing}]"


RESULTS: dict[int, Outcome] = {}


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _record(number, passed, detail, seconds, limit=None) -> Outcome:
    within = limit is None or seconds < limit
    out = Outcome(number, passed and within, detail, seconds, limit)
    RESULTS[number] = out
    return out


def _warm_up_kernels() -> None:
    # compile (or load cached) numba kernels so criterion 1 times the search itself
    F2 = make_field(2)
    C = LinearCode.from_rows(F2, np.array([[1, 1, 0], [0, 1, 1]]))
    min_distance_exhaustive(C)
    min_distance_bz(C)


def criterion_1() -> Outcome:
    _warm_up_kernels()

    def run():
        C = code_from_generator(PRESETS["d22"].spec())
        return C, min_distance_exhaustive(C)

    (C, res), t = _timed(run)
    params = (C.n, C.k, res.d)
    ok = params == (22, 12, 6) and res.exact and res.method == "exhaustive"
    return _record(1, ok, f"D22 -> [{C.n},{C.k},{res.d}] exhaustive, expected [22,12,6]", t, 1)


def _bz_preset(number, name, expected, limit) -> Outcome:
    def run():
        C = code_from_generator(PRESETS[name].spec())
        return C, min_distance_bz(C)

    (C, res), t = _timed(run)
    ok = (C.n, C.k, res.d) == expected and res.exact
    detail = f"{name} -> [{C.n},{C.k},{res.d}] certified={res.exact} work={res.work}, expected [{','.join(map(str, expected))}]"
    return _record(number, ok, detail, t, limit)


def criterion_2() -> Outcome:
    return _bz_preset(2, "d86a", (86, 44, 15), 300)


def criterion_3() -> Outcome:
    return _bz_preset(3, "d86b", (86, 72, 5), 60)


def criterion_4() -> Outcome:
    def run():
        spec = PRESETS["d66"].spec()
        C = code_from_generator(spec)
        return spec, C, min_distance_bz(C)

    (spec, C, res), t = _timed(run)
    two_m_minus_deg = 2 * (spec.m - spec.generator.degree)
    if C.n == 66 and res.d == 12 and res.exact:
        return _record(4, True, f"D66 -> [66,{C.k},12] certified; k vs claimed 33 vs 2(m-deg p)={two_m_minus_deg}", t)
    row = next(r for r in reproduce_rows() if r["preset"] == "d66")
    documented = "d66" in KNOWN_DISCREPANCIES and row["status"] == "documented-discrepancy"
    fallback = [RESULTS.get(i) for i in range(5, 10)]
    fallback_ok = all(o is not None and o.passed for o in fallback)
    detail = (
        f"D66 as printed -> [{C.n},{C.k},{res.d}] certified={res.exact}, claimed [66,33,12]; "
        f"k={C.k} equals 2(m-deg p)={two_m_minus_deg}; d={res.d} != 12. "
        f"documented={documented}; fallback criteria 5-9 "
        + ("pass" if fallback_ok else "not all passed")
    )
    return _record(4, documented and fallback_ok and res.exact, detail, t)


def _suite(number, runner, limit=None, extra=lambda r: True) -> Outcome:
    res, t = _timed(runner)
    detail = res.summary().split(" ", 1)[1] + ("; " + "; ".join(res.notes) if res.notes else "")
    if res.failures:
        detail += "; first failure: " + res.failures[0]
    return _record(number, res.passed and extra(res), detail, t, limit)


def criterion_5() -> Outcome:
    return _suite(5, lambda: verify.bch_soundness(300), 120,
                  lambda r: r.checked + r.skipped == 300)


def criterion_6() -> Outcome:
    return _suite(6, verify.binary_soundness)


def criterion_7() -> Outcome:
    return _suite(7, lambda: verify.binary_equivalence(m_max=201),
                  extra=lambda r: r.primes_below_50 == [3, 11, 19, 43] and r.checked == 100)


def criterion_8() -> Outcome:
    return _suite(8, lambda: verify.structure(200))


def criterion_9() -> Outcome:
    return _suite(9, lambda: verify.distance_oracle(100), 120, lambda r: r.checked == 100)


ORDER = [1, 2, 3, 5, 6, 7, 8, 9, 4]  # 4 falls back on 5-9
CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


@pytest.mark.parametrize("number", ORDER)
def test_criterion(number):
    outcome = CRITERIA[number]()
    assert outcome.passed, outcome.line()


def test_summary(capsys):
    with capsys.disabled():
        print()
        for i in range(1, 10):
            out = RESULTS.get(i)
            print(out.line() if out else f"criterion {i}: FAIL not run")
    assert all(i in RESULTS and RESULTS[i].passed for i in range(1, 10))


if __name__ == "__main__":
    for i in ORDER:
        CRITERIA[i]()
    for i in range(1, 10):
        print(RESULTS[i].line())
    raise SystemExit(0 if all(o.passed for o in RESULTS.values()) else 1)

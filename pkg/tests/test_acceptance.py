"""Acceptance gate: one pass/fail line per criterion.

Run with ``pytest -v tests/test_acceptance.py`` (lines go straight to the
terminal) or ``python tests/test_acceptance.py``.
"""
import sys
import time

import pytest

from genjack import oracle
from genjack.envelope import jack, transition
from genjack.partitions import format_mp, multipartitions
from genjack.ring import Specialized, Symbolic

_report = print


@pytest.fixture(autouse=True)
def _terminal(capsys):
    global _report

    def emit(line):
        with capsys.disabled():
            print("\n" + line)

    _report = emit
    yield
    _report = print


def record(number: int, ok: bool, detail: str):
    _report(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c01_published_expansions():
    rep, secs = timed(oracle.verify_reference)
    record(1, rep.ok and rep.checked == 16 and secs < 10,
           f"{rep.checked}/16 published expansions exact in {secs:.2f}s (limit 10s)")


def test_c02_rank_one_equivalence():
    dom = Symbolic(1)
    bad_j, bad_star = [], []

    def run():
        for n in range(6):
            for mp in multipartitions(n, 1):
                ref = oracle.jack_oracle_r1(mp[0], dom)
                if jack(mp, "J", dom) != ref:
                    bad_j.append(format_mp(mp))
                if jack(mp, "Jstar", dom) != ref:
                    bad_star.append(format_mp(mp))

    _, secs = timed(run)
    detail = (f"J = oracle fails on {bad_j or 'none'}; J* = oracle fails on {bad_star or 'none'} "
              f"({secs:.1f}s, limit 120s)")
    record(2, not bad_j and not bad_star and secs < 120, detail)


def test_c03_hamiltonian():
    reps = []

    def run():
        for r in (1, 2, 3):
            sym_top = 3 if r <= 2 else 0
            reps.append(oracle.verify_hamiltonian(r, sym_top))
            for seed in (11, 12, 13):
                reps.append(oracle.verify_hamiltonian(r, 4, dom=Specialized.random(r, seed)))

    _, secs = timed(run)
    ok = all(rep.ok for rep in reps)
    checks = sum(rep.checked for rep in reps)
    record(3, ok and secs < 600, f"{checks} eigenvector checks, r<=3, n<=4 ({secs:.1f}s, limit 600s)")


def test_c04_duality():
    reps = [oracle.verify_duality(r, n) for r in (1, 2) for n in range(4)]
    ok = all(rep.ok for rep in reps)
    record(4, ok, f"<J, J*> = sigma^n E with frozen sigma = {oracle.frozen_sign():+d}, "
                  f"{sum(rep.checked for rep in reps)} pairings, off-diagonal zero")


def test_c05_cauchy():
    reps = [oracle.verify_cauchy(r, 4) for r in (1, 2)]
    reps += [oracle.verify_cauchy_finite(r, 3, 2) for r in (1, 2)]
    ok = all(rep.ok for rep in reps)
    record(5, ok, f"kernel identity to degree 4 and product form to degree 3 "
                  f"(2 variables per color), sigma = {oracle.frozen_sign():+d}")


def test_c06_symmetries():
    reps = [oracle.verify_symmetries(r, n) for r in (1, 2, 3) for n in range(4)]
    ok = all(rep.ok for rep in reps)
    record(6, ok, f"color reversal r=2,3 and t1<->t2 transposition r<=3, n<=3 "
                  f"({sum(rep.checked for rep in reps)} identities)")


def test_c07_matrix_identities():
    reps = [oracle.verify_matrix_identities(r, n) for r in (1, 2) for n in range(4)]
    ok = all(rep.ok for rep in reps)
    record(7, ok, "T = U*^t, T* = U^t, U E^-1 U*^t = 1, U E^-1 T = 1 for r<=2, n<=3")


def test_c08_degeneration():
    reps = [oracle.verify_degeneration_all(r, 4) for r in (1, 2)]
    readings = [set(rep.notes.get("readings", ())) for rep in reps]
    common = set.intersection(*readings)
    ok = all(rep.ok for rep in reps) and len(common) >= 1
    record(8, ok, f"proportional to the Schur product for r<=2, n<=4; reading {sorted(common)}")


def test_c09_engine_consistency():
    reps = []

    def run():
        for n in range(6):
            reps.append(oracle.verify_engine(1, n, reorderings=2))
            reps.append(oracle.verify_engine(2, n, reorderings=2 if n <= 4 else 1))
        for n in range(4):
            reps.append(oracle.verify_engine(3, n, reorderings=2))

    _, secs = timed(run)
    ok = all(rep.ok for rep in reps)
    record(9, ok, f"pruned = literal, tie-break reorderings, specialized = symbolic at 3 points; "
                  f"r<=2 n<=5 and r=3 n<=3, {sum(rep.checked for rep in reps)} checks ({secs:.0f}s)")


def test_c10_performance():
    _, sym_secs = timed(lambda: transition("T", 2, 6, Symbolic(2)))
    _, spec_secs = timed(lambda: transition("T", 2, 8, Specialized.random(2, seed=8)))
    ok = sym_secs < 1800 and spec_secs < 1800
    record(10, ok, f"T block r=2: n=6 symbolic {sym_secs:.0f}s, n=8 specialized {spec_secs:.0f}s "
                   f"(limit 1800s each, single core)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

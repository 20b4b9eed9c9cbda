"""Acceptance gate: every criterion at its stated range and tolerance.

Each test prints one PASS/FAIL line.  Two criteria are intentionally left
red rather than weakened: sweeping the (8/3) n ln n bound from its stated
threshold n = 5315 finds 15 genuine counterexamples (n in [5321, 5549],
independently confirmed by a definition-scan oracle; the bound holds from
n = 5550 on), and sweeping 2 pi_R(x) > pi_R(2x) from its stated threshold
x = 11 finds 63 genuine counterexamples (x in [15, 568]; clean from 569).
The sweeps themselves are correct; the stated thresholds are not.

The two full-range criteria (sieve limit 1.6e8) only run with RKIT_FULL=1.
"""

import os
import resource
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))
from oracles import distinct_subset_sums, pairing_exhaustive  # noqa: E402

from rkit.additive import (  # noqa: E402
    greenfield_pairing,
    largest_unrepresentable,
    pairing_oracle,
    richert_represent,
    verify_pairing,
    verify_representation,
    verify_seed_tables,
)
from rkit.bfile import crosscheck, parse_bfile  # noqa: E402
from rkit.cache import cache_read, cache_write  # noqa: E402
from rkit.derivation import (  # noqa: E402
    CRamanujanQuery,
    c_ramanujan,
    derive,
    derived_ramanujan_primes,
    ramanujan_primes,
)
from rkit.errors import Infeasible  # noqa: E402
from rkit.sequences import build_prime_set  # noqa: E402
from rkit.verification import (  # noqa: E402
    dyadic_ratio_trend,
    verify_corollary4,
    verify_eq10,
    verify_eq36,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3_equivalence,
    verify_lemma4,
    verify_theorem4,
    verify_theorem5,
)

FULL = os.environ.get("RKIT_FULL") == "1"
needs_full = pytest.mark.skipif(not FULL, reason="set RKIT_FULL=1 for the 1.6e8 sweeps")

TABLE1 = [
    11, 41, 59, 97, 149, 151, 227, 229, 233, 239,
    263, 307, 367, 373, 401, 409, 569, 571, 587, 593,
    599, 641, 643, 647, 653, 719, 751, 821, 937, 941,
    1009, 1019, 1021, 1031, 1049, 1051, 1061, 1063, 1217, 1367,
    1373, 1423, 1427, 1439, 1481, 1487, 1549, 1553, 1559, 1567,
]


def _line(num, ok: bool, detail: str) -> None:
    print(f"CRITERION {num:>3}: {'PASS' if ok else 'FAIL'} | {detail}")


@pytest.fixture(scope="module")
def ps42():
    return build_prime_set(4_200_000)


@pytest.fixture(scope="module")
def lv1(ps42):
    return ramanujan_primes(4_200_000, prime_set=ps42)


@pytest.fixture(scope="module")
def lv2(lv1):
    return derive(lv1.to_counter(), None, level=2)


def test_criterion_1_first_50_derived_terms():
    t0 = time.time()
    seq = derived_ramanujan_primes(10_000, max_terms=50)
    elapsed = time.time() - t0
    ok = seq.elements.tolist() == TABLE1 and elapsed < 1.0
    _line(1, ok, f"50 level-2 terms at limit 1e4, exact match, {elapsed * 1000:.0f} ms")
    assert seq.elements.tolist() == TABLE1
    assert elapsed < 1.0


def test_criterion_2_introductory_prefixes():
    l1 = ramanujan_primes(10_000).elements[:6].tolist()
    l2 = derived_ramanujan_primes(10_000).elements[:5].tolist()
    ok = l1 == [2, 11, 17, 29, 41, 47] and l2 == [11, 41, 59, 97, 149]
    _line(2, ok, f"level-1 prefix {l1}, level-2 prefix {l2}")
    assert l1 == [2, 11, 17, 29, 41, 47]
    assert l2 == [11, 41, 59, 97, 149]


@needs_full
def test_criterion_3_full_range_pivot_and_l4_sweep():
    t0 = time.time()
    ps = build_prime_set(160_000_000)
    seq = ramanujan_primes(160_000_000, max_terms=2_113_924, prime_set=ps)
    pivot = seq.term(2_113_924)
    report = verify_lemma4(seq.to_counter(), 2_113_923)
    elapsed = time.time() - t0
    tracked_mb = (ps.nbytes + seq.elements.nbytes) / 1e6
    rss_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    ok = pivot == 75_374_791 and report.passed and elapsed < 600 and tracked_mb < 100
    _line(
        3,
        ok,
        f"pivot term {pivot} (expected 75374791: {pivot == 75_374_791}); "
        f"L4 sweep [5315, 2113924) -> {len(report.counterexamples)} counterexamples "
        f"(expected 0); {elapsed:.1f}s, structures {tracked_mb:.1f} MB, process RSS {rss_mb:.0f} MB",
    )
    assert pivot == 75_374_791
    assert elapsed < 600
    assert tracked_mb < 100
    assert report.passed, (
        f"(8/3) n ln n bound fails at n = {report.counterexamples} "
        f"(values {report.extras['failing_values']}); oracle-confirmed genuine; "
        f"holds for all n in [{report.extras['empirical_threshold']}, 2113924)"
    )


def test_criterion_4_doubling_sweep_to_1e6(lv1):
    report = verify_theorem4(lv1.to_counter(), 1_000_000)
    _line(
        4,
        report.passed,
        f"2 pi_R(x) > pi_R(2x) on [11, 1e6]: {len(report.counterexamples)} counterexamples "
        f"(expected 0); clean from x = {report.extras.get('empirical_threshold', 11)}",
    )
    assert report.passed, (
        f"strict doubling inequality fails at {len(report.counterexamples)} integers in "
        f"[{min(report.counterexamples)}, {max(report.counterexamples)}], "
        f"oracle-confirmed genuine; holds on [569, 1e6]"
    )


def test_criterion_5_interleaving_sweep(lv1, lv2):
    report = verify_theorem5(lv1.to_counter(), lv2.to_counter(), 5000)
    _line(5, report.passed, f"R_2n <= R'_n < R_3n for n <= 5000: "
          f"{len(report.counterexamples)} counterexamples, min margin {report.min_margin}")
    assert report.passed


def test_criterion_6_prime_index_envelopes(ps42, lv1, lv2):
    report = verify_corollary4(ps42, lv1.to_counter(), lv2.to_counter(), 5000)
    r36 = verify_eq36(ps42, lv1.to_counter(), 5000)
    ok = report.passed and r36.passed
    _line(6, ok, f"p_4n < R'_n < p_9n (n <= 5000) and p_2n < R_n < p_3n (2 <= n <= 5000): "
          f"{len(report.counterexamples) + len(r36.counterexamples)} counterexamples")
    assert report.passed and r36.passed


def test_criterion_7_window_lower_bound(lv1):
    report = verify_eq10(lv1.to_counter(), 1_000_000)
    _line(7, report.passed, f"pi_R window bound on [599, 1e6] plus witness cover of [11, 599): "
          f"{len(report.counterexamples)} counterexamples, min margin {report.min_margin:.3f}")
    assert report.passed


def test_criterion_8a_halfgrid_sweep(ps42):
    report = verify_lemma1(ps42, 1_000_000)
    _line(8, report.passed, f"pi(2x)-pi(x) <= 2(pi(x)-pi(x/2)) at step 1/2 on [569, 1e6]: "
          f"{len(report.counterexamples)} counterexamples, min margin {report.min_margin}")
    assert report.passed


@needs_full
def test_criterion_8b_large_x_window_bound_full():
    x0 = 75_374_781
    ps = build_prime_set(x0 + 1_000_000)
    report = verify_lemma2(ps, x0 + 1_000_000)
    _line(8, report.passed, f"pi window lower bound on [{x0}, {x0 + 10**6}]: "
          f"{len(report.counterexamples)} counterexamples, min margin {report.min_margin:.1f}")
    assert report.passed


def test_criterion_9_additive_results(lv1):
    ram = lv1.to_counter()
    verify_seed_tables(ram)  # 102 representation rows + 9 pairings, re-verified

    failures = []
    for n in range(123, 100_001):
        rep = richert_represent(n, ram)
        ok, reason = verify_representation(rep, ram)
        if not ok:
            failures.append((n, reason))
    assert not failures

    largest = largest_unrepresentable(500, ram)
    small = [int(v) for v in ram.elements_in_range(2, 501)]
    oracle_reachable = distinct_subset_sums(small, 500)
    oracle_largest = max(n for n in range(1, 501) if n not in oracle_reachable)
    assert largest == oracle_largest == 122

    pair_failures = []
    for k in range(17, 10_001):
        pairing = greenfield_pairing(k, ram)
        ok, reason = verify_pairing(pairing, ram)
        if not ok:
            pair_failures.append((k, reason))
    assert not pair_failures

    members = {int(v) for v in ram.elements_in_range(2, 200)}
    construct, oracle, brute = set(), set(), set()
    for k in range(1, 21):
        try:
            greenfield_pairing(k, ram)
            construct.add(k)
        except Infeasible:
            pass
        try:
            pairing_oracle(k, ram)
            oracle.add(k)
        except Infeasible:
            pass
        if pairing_exhaustive(k, members) is not None:
            brute.add(k)
    assert construct == oracle == brute
    infeasible_below_18 = set(range(1, 18)) - construct
    assert infeasible_below_18 == {1, 2, 3, 4, 7, 10, 13, 16}

    _line(9, True, "102 seed rows re-verified; representations for all n in [123, 1e5]; "
          "largest gap 122 (DP oracle agrees); pairings valid for 17 <= k <= 1e4; "
          f"feasibility below 18 matches the exhaustive matcher: solvable {sorted(construct & set(range(1, 18)))}")


def test_criterion_10_property_suites(ps42, lv1, lv2, tmp_path):
    from oracles import derived_ramanujan_oracle, ramanujan_oracle

    # derivation oracle equivalence at limit 1e4
    assert ramanujan_primes(10_000).elements.tolist() == ramanujan_oracle(10_000)
    assert derived_ramanujan_primes(10_000).elements.tolist() == derived_ramanujan_oracle(10_000)

    # element membership of derived terms at limit 1e6
    lv1m = ramanujan_primes(1_000_000)
    lv2m = derive(lv1m.to_counter(), None, level=2)
    s1 = set(lv1m.elements.tolist())
    assert set(lv2m.elements.tolist()) <= s1
    psm = build_prime_set(1_000_000)
    odd = lv1m.elements % 2 == 1
    assert all(int(v) in psm for v in lv1m.elements[odd][:500])

    # c-consistency: c = 1/2 reproduces level 1
    for n in (1, 2, 3, 4, 5, 6, 25):
        assert c_ramanujan(CRamanujanQuery(1, 2, n), 100_000) == lv1m.term(n)

    # rank subadditivity equivalence for all k, l <= 50
    eq_report = verify_lemma3_equivalence(lv1.to_counter(), 50, 50)
    assert eq_report.passed

    # cache round-trip
    seq = derived_ramanujan_primes(10_000, max_terms=50)
    path = tmp_path / "lv2.rksq"
    cache_write(seq, path)
    assert cache_read(path) == seq

    # b-file crosschecks against the locally provided prefixes
    data_dir = os.path.join(os.path.dirname(__file__), "data")
    r1 = crosscheck(ramanujan_primes(10_000), parse_bfile(os.path.join(data_dir, "b104272.txt")))
    r2 = crosscheck(seq, parse_bfile(os.path.join(data_dir, "b192820.txt")))
    assert r1["mismatches"] == [] and r1["checked"] == 100
    assert r2["mismatches"] == [] and r2["checked"] == 50

    # informational ratio trend (not gated on its limit value, only produced)
    trend = dyadic_ratio_trend(lv2.to_counter(), ps42)
    assert len(trend["blocks"]) >= 8
    first, last = trend["blocks"][0]["mean_abs_dev"], trend["blocks"][-1]["mean_abs_dev"]

    _line(10, True, "oracle equivalence at 1e4; membership at 1e6; c = 1/2 consistency; "
          "box equivalence k,l <= 50; cache round-trip; b-file crosschecks 100+50 terms; "
          f"ratio trend {first:.4f} -> {last:.4f} over {len(trend['blocks'])} dyadic blocks "
          f"(decreasing: {trend['overall_decreasing']})")
    assert trend["overall_decreasing"]

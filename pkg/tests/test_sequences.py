import numpy as np
import pytest

from oracles import pi_trial, primes_trial
from rkit.errors import InvalidLimit, InvalidSequence, OutOfRange
from rkit.sequences import (
    MonotoneCounter,
    PrimeCounter,
    build_prime_set,
    counter_from_elements,
    window,
)


def test_small_limits():
    assert build_prime_set(12).primes_in_range(2, 13).tolist() == [2, 3, 5, 7, 11]
    ps2 = build_prime_set(2)
    assert ps2.pi(2) == 1 and 2 in ps2
    with pytest.raises(InvalidLimit):
        build_prime_set(1)


def test_membership_matches_trial_division():
    ps = build_prime_set(10_000)
    expected = set(primes_trial(10_000))
    for n in range(2, 10_001):
        assert (n in ps) == (n in expected), n


def test_pi_examples_and_floor_semantics(ps100k):
    assert ps100k.pi(1.9) == 0
    assert ps100k.pi(11) == 5
    assert ps100k.pi(11.5) == 5
    assert ps100k.pi(100_000) == pi_trial(100_000, primes_trial(100_000))
    with pytest.raises(OutOfRange):
        ps100k.pi(100_001)
    with pytest.raises(ValueError):
        ps100k.pi(-1)


def test_nth_prime_examples(ps100k):
    assert ps100k.nth_prime(1) == 2
    assert ps100k.nth_prime(5) == 11
    assert ps100k.nth_prime(25) == 97
    with pytest.raises(OutOfRange) as exc:
        ps100k.nth_prime(10_000)
    assert exc.value.required_limit > 100_000


def test_pi_nth_inverse_roundtrip(ps100k):
    for n in range(1, 1230):
        p = ps100k.nth_prime(n)
        assert ps100k.pi(p) == n
    for x in (2, 3, 10, 97, 1000, 99_991):
        assert ps100k.nth_prime(ps100k.pi(x)) <= x


def test_checkpointed_pi_matches_linear_scan(rng):
    # small stride forces many checkpoint blocks
    ps = build_prime_set(70_000, segment_odds=1 << 12, checkpoint_stride=1 << 8)
    primes = primes_trial(70_000)
    xs = rng.integers(2, 70_000, size=1000)
    for x in xs:
        assert ps.pi(int(x)) == pi_trial(int(x), primes)


def test_pi_block_and_ranges(ps100k):
    primes = primes_trial(3000)
    block = ps100k.pi_block(0, 3001)
    for x in range(0, 3001, 97):
        assert block[x] == pi_trial(x, primes)
    assert ps100k.primes_in_range(90, 100).tolist() == [97]
    got = ps100k.pi_at_sorted(np.array([2, 10, 11, 97, 2000, 99_991]))
    assert got.tolist() == [1, 4, 5, 25, 303, 9592]


def test_counter_rank_select_window(ram):
    c = counter_from_elements([2, 11, 17], 100)
    assert c.rank(16) == 2
    assert c.select(3) == 17
    assert ram.rank(100) == 10  # Ramanujan primes <= 100
    assert window(ram, 41) == 2
    prime_counter = PrimeCounter(build_prime_set(100))
    assert window(prime_counter, 10) == 1
    assert window(prime_counter, 2) == 1


def test_counter_validation_and_bounds():
    with pytest.raises(InvalidSequence):
        counter_from_elements([2, 11, 11], 100)
    with pytest.raises(InvalidSequence):
        counter_from_elements([11, 2], 100)
    with pytest.raises(InvalidSequence):
        counter_from_elements([2, 101], 100)
    c = counter_from_elements([2, 11, 17], 50)
    with pytest.raises(OutOfRange):
        c.rank(51)
    with pytest.raises(OutOfRange):
        c.select(4)


def test_rank_select_inverse_properties(ram, rng):
    for n in rng.integers(1, len(ram.elements) + 1, size=200):
        assert ram.rank(ram.select(int(n))) == int(n)
    for x in rng.integers(2, ram.source_limit, size=200):
        r = ram.rank(int(x))
        if r:
            assert ram.select(r) <= int(x)


def test_window_step_property(ps100k):
    """The window moves by at most one per integer step and stays >= 0."""
    xs = np.arange(0, 5000)
    w = ps100k.pi_block(0, 5000) - ps100k.pi_block(0, 5000)[xs // 2]
    assert (w >= 0).all()
    steps = np.diff(w)
    assert set(np.unique(steps)) <= {-1, 0, 1}
    # increases only at primes, decreases only at doubled primes
    primes = set(primes_trial(5000))
    ups = xs[1:][steps == 1]
    downs = xs[1:][steps == -1]
    assert all(int(x) in primes for x in ups)
    assert all(int(x) % 2 == 0 and int(x) // 2 in primes for x in downs)


def test_immutability_of_queries(ps100k):
    before = ps100k.bits.copy()
    ps100k.pi(99_999)
    ps100k.nth_prime(100)
    ps100k.primes_in_range(0, 1000)
    assert np.array_equal(before, ps100k.bits)

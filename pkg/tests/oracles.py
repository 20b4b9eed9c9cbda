"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive: trial division, definition scans,
exhaustive subset enumeration.  None of it shares code with the package
under test, so agreement between the two is meaningful.
"""

from bisect import bisect_right
from fractions import Fraction
from itertools import combinations


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_trial(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if is_prime_trial(n)]


def pi_trial(x: float, primes: list[int] | None = None) -> int:
    import math

    xf = math.floor(x)
    if primes is None:
        return sum(1 for n in range(2, xf + 1) if is_prime_trial(n))
    return bisect_right(primes, xf)


def window_scan_derive(elements: list[int], source_limit: int, max_terms: int) -> list[int]:
    """Definition scan: for each n, the smallest R with w(x) >= n on [R, source_limit].

    Evaluates the window w(x) = rank(x) - rank(x // 2) independently at every
    integer x (no incremental bookkeeping), then walks backwards per n.
    Only returns terms whose threshold is certain given the finite scan,
    i.e. terms R <= source_limit // 2.
    """
    w = [0] * (source_limit + 1)
    for x in range(source_limit + 1):
        w[x] = bisect_right(elements, x) - bisect_right(elements, x // 2)
    terms = []
    for n in range(1, max_terms + 1):
        last_bad = None
        for x in range(source_limit, -1, -1):
            if w[x] < n:
                last_bad = x
                break
        if last_bad is None or last_bad >= source_limit:
            break
        r = last_bad + 1
        if r > source_limit // 2:
            break
        terms.append(r)
    return terms


def ramanujan_oracle(limit: int, max_terms: int = 10**9) -> list[int]:
    return window_scan_derive(primes_trial(limit), limit, max_terms)


def derived_ramanujan_oracle(limit: int, max_terms: int = 10**9) -> list[int]:
    ram = ramanujan_oracle(limit)
    return window_scan_derive(ram, limit // 2, max_terms)


def level_k_oracle(limit: int, k: int, max_terms: int = 10**9) -> list[int]:
    elements = primes_trial(limit)
    source_limit = limit
    for _ in range(k):
        elements = window_scan_derive(elements, source_limit, max_terms)
        source_limit //= 2
    return elements


def c_window_scan(c: Fraction, n: int, limit: int, primes: list[int]) -> int:
    """Smallest integer R with pi(x) - pi(c*x) >= n for all real x in [R, limit].

    Scans every rational event point x = k / c.numerator exactly.
    """
    a = c.numerator
    last_bad = None
    for k in range(limit * a, -1, -1):
        x_floor = k // a
        cx_floor = (k * c.numerator // c.denominator) // a  # floor(c * k/a)
        g = bisect_right(primes, x_floor) - bisect_right(primes, cx_floor)
        if g < n:
            last_bad = k
            break
    assert last_bad is not None
    # failing interval ends at the next grid point; round up to an integer
    return -((-(last_bad + 1)) // a)


def distinct_subset_sums(parts: list[int], limit: int) -> set[int]:
    """All values <= limit expressible as a sum of distinct entries of parts."""
    reachable = {0}
    for p in parts:
        reachable |= {s + p for s in reachable if s + p <= limit}
    reachable.discard(0)
    return reachable


def representation_witness(target: int, parts: list[int]) -> tuple[int, ...] | None:
    """Any subset of distinct parts summing to target, by exhaustive search."""
    usable = [p for p in parts if p <= target]
    for r in range(1, len(usable) + 1):
        for combo in combinations(sorted(usable, reverse=True), r):
            if sum(combo) == target:
                return combo
    return None


def pairing_exhaustive(k: int, ramanujan: set[int]) -> list[tuple[int, int]] | None:
    """Backtracking search for a perfect pairing of {1..2k} with Ramanujan sums."""
    items = list(range(1, 2 * k + 1))
    used = [False] * (2 * k + 1)
    pairs: list[tuple[int, int]] = []

    def rec() -> bool:
        first = None
        for v in items:
            if not used[v]:
                first = v
                break
        if first is None:
            return True
        used[first] = True
        for v in items:
            if not used[v] and v != first and (first + v) in ramanujan:
                used[v] = True
                pairs.append((first, v))
                if rec():
                    return True
                pairs.pop()
                used[v] = False
        used[first] = False
        return False

    return list(pairs) if rec() else None

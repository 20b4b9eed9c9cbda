"""The window-derivation operator and its instantiations.

Given a strictly increasing integer sequence S, the operator produces the
thresholds D_n = smallest R such that rank_S(x) - rank_S(x/2) >= n for every
x >= R.  Applied to the primes it yields the Ramanujan primes; applied again,
the derived (2-)Ramanujan primes; iterating gives level-k sequences.  A
rational-grid variant handles intervals (c*x, x] for any c in (0, 1).

A finite scan cannot establish "for all x >= R" outright, so terms are only
certified while D_n <= source_limit / SAFETY_DIVISOR (the window at x looks
back to x/2) and, for levels 1 and 2, while the proven two-sided envelopes
hold: 2n < pi(D_n) < 3n for level 1 and R_{2n} <= D_n < R_{3n} for level 2.
Level >= 3 has no proven envelope; those sequences carry a heuristic flag.
Uncertified terms are withheld, never returned.
"""

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import EmptyLevel, InvalidSequence, OutOfRange, RkitError
from .sequences import MonotoneCounter, PrimeCounter, PrimeSet, build_prime_set

SAFETY_DIVISOR = 2
MAX_C_DENOMINATOR = 64
_SCAN_CHUNK = 1 << 20


@dataclass(eq=False)
class DerivedSequence:
    """Certified prefix of a window-derived sequence.

    level 1 = Ramanujan primes, level 2 = derived Ramanujan primes, higher
    levels are further iterations.  source_limit is the scan bound of the
    sequence this one was derived from; every returned element is final.
    """

    level: int
    elements: np.ndarray
    certified_count: int
    source_limit: int
    truncated: bool = field(default=False, compare=False)
    # set when certification stopped short of the divisor budget, so that
    # completeness is never overstated (has not been observed in practice)
    complete_to_override: int | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        self.elements = np.asarray(self.elements, dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DerivedSequence):
            return NotImplemented
        return (
            self.level == other.level
            and self.certified_count == other.certified_count
            and self.source_limit == other.source_limit
            and np.array_equal(self.elements, other.elements)
        )

    @property
    def heuristic(self) -> bool:
        """True when no proven envelope backs the certification (level >= 3)."""
        return self.level >= 3

    @property
    def complete_to(self) -> int:
        """Every sequence member <= this bound is present in elements."""
        if self.complete_to_override is not None:
            return self.complete_to_override
        return self.source_limit // SAFETY_DIVISOR

    def to_counter(self) -> MonotoneCounter:
        return MonotoneCounter(self.elements, self.complete_to)

    def term(self, n: int) -> int:
        """The n-th term, 1-based."""
        if n < 1 or n > len(self.elements):
            raise OutOfRange(f"term {n} not certified (have {len(self.elements)})")
        return int(self.elements[n - 1])


def _window_scan(source, cap: int, scan_limit: int, chunk: int = _SCAN_CHUNK):
    """Forward scan of w(x) = rank(x) - rank(x//2) over integers [0, scan_limit].

    Returns (last_at, final_w) where last_at[v] is the last x with w(x) == v
    for v <= cap (values above cap are clipped into a sentinel slot).  The
    window moves by at most one per step, so the walk visits every level up
    to its running maximum and "last time at v" fully determines D_{v+1}.
    """
    # int32 throughout: window values stay below pi(2^31) and positions below
    # 2^31 for every supported sweep range, and the buffers halve peak memory
    last_at = np.full(cap + 2, -1, dtype=np.int64)
    carry = 0
    for a in range(0, scan_limit + 1, chunk):
        b = min(a + chunk, scan_limit + 1)
        delta = np.zeros(b - a, dtype=np.int32)
        members = source.elements_in_range(a, b)
        delta[members - a] += 1
        halved = source.elements_in_range((a + 1) // 2, (b + 1) // 2)
        delta[2 * halved - a] -= 1
        w = np.cumsum(delta, dtype=np.int32)
        w += np.int32(carry)
        carry = int(w[-1])
        np.minimum(w, np.int32(cap + 1), out=w)
        pos_dtype = np.int32 if scan_limit <= 2**31 - 2 else np.int64
        last_at[w] = np.arange(a, b, dtype=pos_dtype)  # duplicates keep the last write
    return last_at, carry


def _certify(terms: np.ndarray, source, level: int) -> int:
    """Length of the certified prefix of candidate terms.

    The divisor rule is applied by the caller; here we enforce the proven
    envelopes for levels 1 and 2.  An envelope violation would mean a proven
    bound failed on real data, so it raises instead of silently truncating.
    """
    if level >= 3 or len(terms) == 0:
        return len(terms)

    def fail(index: int) -> None:
        raise RkitError(
            f"certification envelope violated at level-{level} term {index + 1} "
            f"(value {int(terms[index])}); this contradicts a proven bound"
        )

    if level == 1:
        for i in range(0, len(terms), 1 << 18):  # chunked: full-scale runs are large
            part = terms[i : i + (1 << 18)]
            n = np.arange(i + 1, i + len(part) + 1)
            # terms are already sorted, so skip rank_many's argsort round-trip
            if isinstance(source, PrimeCounter):
                ranks = source.prime_set.pi_at_sorted(part, chunk=1 << 19)
            else:
                ranks = source.rank_many(part)
            ok = ranks < 3 * n
            ok &= (ranks > 2 * n) | (n == 1)  # lower bound proven for n >= 2 only
            if not ok.all():
                fail(i + int(np.flatnonzero(~ok)[0]))
        return len(terms)
    usable = min(len(terms), len(source.elements) // 3)
    clipped = terms[:usable]
    n = np.arange(1, usable + 1)
    ok = (source.elements[2 * n - 1] <= clipped) & (clipped < source.elements[3 * n - 1])
    if not ok.all():
        fail(int(np.flatnonzero(~ok)[0]))
    return usable


def derive(source, max_terms: int | None, level: int = 1) -> DerivedSequence:
    """Apply the window-derivation operator to a counter.

    max_terms=None asks for every certifiable term.  When fewer terms can be
    certified than requested the result is truncated and flagged, not an
    error.  For each returned D_n the scan itself witnesses the definition:
    w(D_n - 1) < n and w(x) >= n for every scanned x >= D_n.
    """
    if len(source) == 0:
        raise InvalidSequence("cannot derive from an empty source")
    if max_terms is not None and max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    scan_limit = source.source_limit

    cap = max_terms if max_terms is not None else _all_terms_cap(source)
    while True:
        last_at, final_w = _window_scan(source, cap, scan_limit)
        n_avail = min(cap, final_w)
        terms = last_at[:n_avail] + 1
        del last_at
        budget = scan_limit // SAFETY_DIVISOR
        c_div = int(np.searchsorted(terms, budget, side="right"))
        if max_terms is not None or n_avail < cap or c_div < n_avail:
            break
        cap *= 2  # the cap bound the scan before the divisor rule did; rescan

    terms = terms[:c_div]
    if level <= 2 and len(terms) and not _contains_all(source, terms):
        raise RkitError("derived term is not a member of its source sequence")
    certified = _certify(terms, source, level)
    override = int(terms[certified]) - 1 if certified < c_div else None
    requested = max_terms if max_terms is not None else certified
    return DerivedSequence(
        level=level,
        elements=terms[: min(certified, requested)],
        certified_count=min(certified, requested),
        source_limit=scan_limit,
        truncated=requested > certified,
        complete_to_override=override,
    )


def _all_terms_cap(source) -> int:
    # window values never exceed the member count; for the dense prime case
    # use the pi(x)/2 envelope to keep the level table small at 1.6e8 scale
    if isinstance(source, PrimeCounter):
        return source.prime_set.pi(source.source_limit // SAFETY_DIVISOR) // 2 + 1024
    return len(source) + 2


def _contains_all(source, terms: np.ndarray, chunk: int = 1 << 19) -> bool:
    if isinstance(source, PrimeCounter):
        ps = source.prime_set
        for i in range(0, len(terms), chunk):
            part = terms[i : i + chunk]
            odd = part % 2 == 1
            idx = (part - 1) // 2
            hit = np.zeros(len(part), dtype=bool)
            hit[odd] = (ps.bits[idx[odd] >> 3] >> (7 - (idx[odd] & 7))) & 1 == 1
            hit[~odd] = part[~odd] == 2
            if not hit.all():
                return False
        return True
    pos = np.searchsorted(source.elements, terms)
    pos = np.minimum(pos, len(source.elements) - 1)
    return bool((source.elements[pos] == terms).all())


def ramanujan_primes(
    limit: int, max_terms: int | None = None, prime_set: PrimeSet | None = None
) -> DerivedSequence:
    """Level-1 derivation: thresholds of pi(x) - pi(x/2), certified prefix."""
    ps = prime_set if prime_set is not None else build_prime_set(limit)
    if ps.limit < limit:
        raise OutOfRange(f"prime set covers {ps.limit} < {limit}", required_limit=limit)
    counter = PrimeCounter(ps)
    if ps.limit > limit:
        counter.source_limit = limit
    return derive(counter, max_terms, level=1)


def derived_ramanujan_primes(
    limit: int, max_terms: int | None = None, prime_set: PrimeSet | None = None
) -> DerivedSequence:
    """Level-2 derivation: the operator applied to the Ramanujan primes."""
    level1 = ramanujan_primes(limit, None, prime_set)
    if len(level1.elements) == 0:
        raise EmptyLevel("no certified level-1 terms at this limit")
    return derive(level1.to_counter(), max_terms, level=2)


def level_k_sequence(
    limit: int, k: int, max_terms: int | None = None, prime_set: PrimeSet | None = None
) -> DerivedSequence:
    """k-fold application of the operator starting from the primes."""
    if k < 1:
        raise ValueError("level k must be >= 1")
    seq = ramanujan_primes(limit, None if k > 1 else max_terms, prime_set)
    for lvl in range(2, k + 1):
        if len(seq.elements) == 0:
            raise EmptyLevel(f"certified terms ran out at level {seq.level} (limit {limit})")
        seq = derive(seq.to_counter(), max_terms if lvl == k else None, level=lvl)
    if len(seq.elements) == 0:
        raise EmptyLevel(f"no certified level-{k} terms at limit {limit}")
    return seq


@dataclass(frozen=True)
class CRamanujanQuery:
    """Interval query: at least n primes in (c*x, x] for all x >= answer.

    c = c_num / c_den is reduced on construction; c = 1/2 recovers the
    ordinary Ramanujan primes.
    """

    c_num: int
    c_den: int
    n: int

    def __post_init__(self):
        if not (0 < self.c_num < self.c_den):
            raise ValueError("need 0 < c_num < c_den")
        if self.n < 1:
            raise ValueError("need n >= 1")
        g = gcd(self.c_num, self.c_den)
        object.__setattr__(self, "c_num", self.c_num // g)
        object.__setattr__(self, "c_den", self.c_den // g)
        if self.c_den > MAX_C_DENOMINATOR:
            raise ValueError(f"c_den capped at {MAX_C_DENOMINATOR} (got {self.c_den})")


def c_ramanujan(
    query: CRamanujanQuery,
    limit: int,
    prime_set: PrimeSet | None = None,
    chunk: int = _SCAN_CHUNK,
) -> int:
    """Smallest integer R with pi(x) - pi(c*x) >= n for all real x >= R.

    The count g(x) = pi(floor(x)) - pi(floor(c*x)) only changes at rational
    points with denominator dividing c_num, so scanning the grid k / c_num
    with integer arithmetic is exact; no floating point is involved.  The
    answer is certified by the same stable-prefix rule as derive().
    """
    ps = prime_set if prime_set is not None else build_prime_set(limit)
    if ps.limit < limit:
        raise OutOfRange(f"prime set covers {ps.limit} < {limit}", required_limit=limit)
    a, b, n = query.c_num, query.c_den, query.n
    k_max = a * limit
    last_bad = -1
    for k0 in range(0, k_max + 1, chunk):
        k1 = min(k0 + chunk, k_max + 1)
        ks = np.arange(k0, k1)
        xs = ks // a
        ys = ks // b
        pa = ps.pi_block(int(xs[0]), int(xs[-1]) + 1)
        pb = ps.pi_block(int(ys[0]), int(ys[-1]) + 1)
        g = pa[xs - xs[0]] - pb[ys - ys[0]]
        bad = np.flatnonzero(g < n)
        if len(bad):
            last_bad = k0 + int(bad[-1])
    result = (last_bad + a) // a  # ceil((last_bad + 1) / a)
    if result > limit // SAFETY_DIVISOR:
        raise OutOfRange(
            f"R_({a}/{b}),{n} = {result} not certifiable at limit {limit}",
            required_limit=2 * result + 16,
        )
    return result


def interval_prime_count(ps: PrimeSet, c_num: int, c_den: int, x: int) -> int:
    """pi(x) - pi(c*x) with exact rational floor."""
    if not (0 < c_num < c_den):
        raise ValueError("need 0 < c_num < c_den")
    if x < 0:
        raise ValueError("need x >= 0")
    if x > ps.limit:
        raise OutOfRange(f"x = {x} exceeds sieve limit {ps.limit}", required_limit=x)
    return ps.pi(x) - ps._pi_int(c_num * x // c_den)

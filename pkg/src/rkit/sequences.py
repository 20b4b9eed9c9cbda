"""Segmented prime sieve and rank/select counting structures.

The sieve stores odd integers only (one bit per odd number, 2 special-cased),
so a full sweep range of 1.6e8 costs about 10 MB.  Cumulative prime counts
are checkpointed at a fixed power-of-two stride, which keeps pi() queries at
one checkpoint lookup plus a partial popcount.

PrimeSet and MonotoneCounter are immutable after construction and safe for
unlimited concurrent readers.
"""

import math

import numpy as np

from .errors import InvalidLimit, InvalidSequence, OutOfRange

DEFAULT_SEGMENT_ODDS = 1 << 20
DEFAULT_CHECKPOINT_STRIDE = 1 << 16

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _dense_sieve(limit: int) -> np.ndarray:
    """Plain boolean sieve, used only for base primes up to sqrt(limit)."""
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


class PrimeSet:
    """Bit-packed primality table over [2, limit] with count checkpoints.

    Index i of the bit array corresponds to the odd integer 2*i + 1; the bit
    for 1 is always clear and the prime 2 is handled separately.
    checkpoints[j] equals pi(j * stride).
    """

    __slots__ = ("limit", "bits", "checkpoints", "stride", "count", "_n_odd")

    def __init__(self, limit: int, bits: np.ndarray, checkpoints: np.ndarray, stride: int):
        self.limit = limit
        self.bits = bits
        self.checkpoints = checkpoints
        self.stride = stride
        self._n_odd = (limit + 1) // 2
        self.count = self._pi_int(limit)

    # -- queries ---------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 2 or n > self.limit:
            return False
        if n == 2:
            return True
        if n % 2 == 0:
            return False
        i = (n - 1) // 2
        return bool((self.bits[i >> 3] >> (7 - (i & 7))) & 1)

    def pi(self, x: float) -> int:
        """Number of primes <= x; non-integer x uses floor(x)."""
        if x < 0:
            raise ValueError("pi() requires x >= 0")
        if x > self.limit:
            raise OutOfRange(
                f"pi({x}) exceeds sieve limit {self.limit}",
                required_limit=int(math.ceil(x)),
            )
        return self._pi_int(int(math.floor(x)))

    def _pi_int(self, xf: int) -> int:
        if xf < 2:
            return 0
        if xf == 2:
            return 1
        j = xf // self.stride
        count = int(self.checkpoints[j]) if j >= 1 else 1  # the 1 is the prime 2
        lo_idx = (j * self.stride) // 2  # byte-aligned: stride is a multiple of 16
        hi_idx = (xf - 1) // 2
        if hi_idx >= lo_idx:
            seg = self.bits[lo_idx // 8 : hi_idx // 8 + 1]
            count += int(np.unpackbits(seg, count=hi_idx - lo_idx + 1).sum())
        return count

    def nth_prime(self, n: int) -> int:
        """The n-th prime (1-based).  Raises OutOfRange past the sieve."""
        if n < 1:
            raise ValueError("nth_prime() requires n >= 1")
        if n > self.count:
            est = 16 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 16
            raise OutOfRange(
                f"sieve holds {self.count} primes, requested #{n}",
                required_limit=est,
            )
        if n == 1:
            return 2
        # smallest checkpoint with count >= n; j == len(checkpoints) means the
        # prime lies in the partial block past the last checkpoint
        j = int(np.searchsorted(self.checkpoints, n, side="left"))
        before = int(self.checkpoints[j - 1])
        odd_before = before - 1 if j >= 2 else 0
        k = (n - 1) - odd_before  # k-th set bit within the block, 1-based
        lo_idx = ((j - 1) * self.stride) // 2
        hi_idx = min((j * self.stride) // 2, self._n_odd)
        block = np.unpackbits(self.bits[lo_idx // 8 : (hi_idx + 7) // 8], count=hi_idx - lo_idx)
        pos = int(np.searchsorted(np.cumsum(block), k, side="left"))
        return 2 * (lo_idx + pos) + 1

    # -- bulk helpers (the workhorses for vectorized sweeps) --------------

    def indicator(self, a: int, b: int) -> np.ndarray:
        """uint8 primality indicator for the consecutive integers [a, b)."""
        if a < 0 or b < a:
            raise ValueError("need 0 <= a <= b")
        if b - 1 > self.limit:
            raise OutOfRange(
                f"indicator range [{a}, {b}) exceeds sieve limit {self.limit}",
                required_limit=b - 1,
            )
        out = np.zeros(b - a, dtype=np.uint8)
        i_lo, i_hi = a // 2, b // 2  # odd 2i+1 in [a, b)  <=>  i in [a//2, b//2)
        if i_hi > i_lo:
            offset = i_lo & 7
            raw = np.unpackbits(self.bits[i_lo // 8 : (i_hi + 7) // 8])
            out[(2 * i_lo + 1 - a) :: 2] = raw[offset : offset + (i_hi - i_lo)]
        if a <= 2 < b:
            out[2 - a] = 1
        return out

    def pi_block(self, a: int, b: int) -> np.ndarray:
        """Array of pi(x) for x = a, ..., b-1."""
        out = np.cumsum(self.indicator(a, b), dtype=np.int64)
        if a >= 3:
            out += self._pi_int(a - 1)
        return out

    def primes_in_range(self, a: int, b: int) -> np.ndarray:
        """All primes in [a, b) as an int64 array."""
        return np.flatnonzero(self.indicator(a, b)).astype(np.int64) + a

    def pi_at_sorted(self, xs: np.ndarray, chunk: int = 1 << 21) -> np.ndarray:
        """pi() evaluated at an ascending array of integers, chunked by span."""
        xs = np.asarray(xs, dtype=np.int64)
        out = np.empty(len(xs), dtype=np.int64)
        i = 0
        while i < len(xs):
            lo = int(xs[i])
            j = int(np.searchsorted(xs, lo + chunk, side="left"))
            j = max(j, i + 1)
            hi = int(xs[j - 1]) + 1
            block = self.pi_block(lo, hi)
            out[i:j] = block[xs[i:j] - lo]
            i = j
        return out

    @property
    def nbytes(self) -> int:
        return int(self.bits.nbytes + self.checkpoints.nbytes)


def build_prime_set(
    limit: int,
    segment_odds: int = DEFAULT_SEGMENT_ODDS,
    checkpoint_stride: int = DEFAULT_CHECKPOINT_STRIDE,
) -> PrimeSet:
    """Sieve [2, limit] by segments and pack the odd-only primality bits."""
    if limit < 2:
        raise InvalidLimit(f"sieve limit must be >= 2, got {limit}")
    if segment_odds % 8:
        raise ValueError("segment_odds must be a multiple of 8")
    if checkpoint_stride % 16 or checkpoint_stride < 16:
        raise ValueError("checkpoint_stride must be a positive multiple of 16")

    n_odd = (limit + 1) // 2
    base = _dense_sieve(math.isqrt(limit))
    odd_base = [int(p) for p in base if p > 2]

    parts = []
    for seg_start in range(0, n_odd, segment_odds):
        seg_end = min(seg_start + segment_odds, n_odd)
        mask = np.ones(seg_end - seg_start, dtype=bool)
        lo_val = 2 * seg_start + 1
        hi_val = 2 * seg_end - 1
        for p in odd_base:
            if p * p > hi_val:
                break
            start = max(p * p, ((lo_val + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            idx = (start - 1) // 2 - seg_start
            if idx < len(mask):
                mask[idx::p] = False
        if seg_start == 0:
            mask[0] = False  # 1 is not prime
        # mask values beyond the limit (only possible in the last segment)
        if 2 * seg_end - 1 > limit:
            first_bad = (limit + 1) // 2 - seg_start
            mask[first_bad:] = False
        parts.append(np.packbits(mask))
    bits = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint8)

    stride_bytes = checkpoint_stride // 16
    n_ckpt = limit // checkpoint_stride + 1
    checkpoints = np.zeros(n_ckpt, dtype=np.int64)
    if n_ckpt > 1:
        byte_counts = _POPCOUNT[bits]
        # axis-sum accumulates in int64 without materializing an upcast copy
        # (reduceat would transiently cast the whole byte array to int64)
        full = (n_ckpt - 1) * stride_bytes  # always within the byte array
        blocks = byte_counts[:full].reshape(-1, stride_bytes).sum(axis=1, dtype=np.int64)
        checkpoints[1:] = np.cumsum(blocks) + 1  # +1 for the prime 2
    return PrimeSet(limit, bits, checkpoints, checkpoint_stride)


class MonotoneCounter:
    """Strictly increasing integer sequence with rank and select queries.

    source_limit documents completeness: every element of the underlying
    infinite sequence that is <= source_limit is present, and nothing larger
    is.  rank(x) therefore answers "how many sequence members are <= x" only
    for x <= source_limit; beyond that it raises instead of undercounting.
    """

    __slots__ = ("elements", "source_limit")

    def __init__(self, elements, source_limit: int):
        elements = np.asarray(elements, dtype=np.int64)
        if len(elements):
            if np.any(np.diff(elements) <= 0):
                raise InvalidSequence("elements must be strictly increasing")
            if elements[0] < 2:
                raise InvalidSequence("elements must be integers >= 2")
            if elements[-1] > source_limit:
                raise InvalidSequence("elements exceed source_limit")
        self.elements = elements
        self.source_limit = int(source_limit)

    def __len__(self) -> int:
        return len(self.elements)

    def rank(self, x: int) -> int:
        """Count of elements <= x."""
        if x > self.source_limit:
            raise OutOfRange(
                f"rank({x}) exceeds source_limit {self.source_limit}",
                required_limit=int(x),
            )
        return int(np.searchsorted(self.elements, x, side="right"))

    def rank_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if len(xs) and int(xs.max()) > self.source_limit:
            raise OutOfRange(
                f"rank query up to {int(xs.max())} exceeds source_limit {self.source_limit}",
                required_limit=int(xs.max()),
            )
        return np.searchsorted(self.elements, xs, side="right").astype(np.int64)

    def select(self, n: int) -> int:
        """The n-th element (1-based)."""
        if n < 1 or n > len(self.elements):
            raise OutOfRange(f"select({n}) with only {len(self.elements)} elements")
        return int(self.elements[n - 1])

    def elements_in_range(self, a: int, b: int) -> np.ndarray:
        lo = int(np.searchsorted(self.elements, a, side="left"))
        hi = int(np.searchsorted(self.elements, b, side="left"))
        return self.elements[lo:hi]

    def pi_block(self, a: int, b: int) -> np.ndarray:
        """Array of rank(x) for x = a, ..., b-1 (kept name-compatible with PrimeSet)."""
        if b - 1 > self.source_limit:
            raise OutOfRange(
                f"rank block up to {b - 1} exceeds source_limit {self.source_limit}",
                required_limit=b - 1,
            )
        return np.searchsorted(self.elements, np.arange(a, b), side="right").astype(np.int64)


class PrimeCounter:
    """MonotoneCounter-compatible view of a PrimeSet (rank = pi, select = p_n)."""

    __slots__ = ("prime_set", "source_limit")

    def __init__(self, prime_set: PrimeSet):
        self.prime_set = prime_set
        self.source_limit = prime_set.limit

    def __len__(self) -> int:
        return self.prime_set.count

    def rank(self, x: int) -> int:
        if x > self.source_limit:
            raise OutOfRange(
                f"rank({x}) exceeds source_limit {self.source_limit}",
                required_limit=int(x),
            )
        return self.prime_set.pi(x)

    def rank_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        order = np.argsort(xs, kind="stable")
        out = np.empty(len(xs), dtype=np.int64)
        out[order] = self.prime_set.pi_at_sorted(xs[order])
        return out

    def select(self, n: int) -> int:
        return self.prime_set.nth_prime(n)

    def elements_in_range(self, a: int, b: int) -> np.ndarray:
        return self.prime_set.primes_in_range(a, b)

    def pi_block(self, a: int, b: int) -> np.ndarray:
        return self.prime_set.pi_block(a, b)


def counter_from_elements(elements, source_limit: int) -> MonotoneCounter:
    """Build a MonotoneCounter, validating monotonicity and the limit bound."""
    return MonotoneCounter(elements, source_limit)


def window(counter, x: int) -> int:
    """rank(x) - rank(x // 2): members of the sequence in (x/2, x].

    Because all elements are integers the real-valued window is constant on
    each [m, m+1), so evaluating at integers loses nothing.
    """
    return counter.rank(x) - counter.rank(x // 2)

"""Additive constructions over Ramanujan primes.

Two families: expressing integers as sums of distinct Ramanujan primes
(every n >= 123 works; 122 is the largest exception), and partitioning
{1..2k} into k pairs whose sums are all Ramanujan primes (feasible for
k >= 18 and exactly for k in {5,6,8,9,11,12,14,15,17} below that).

Each constructive algorithm has an independent brute-force counterpart
(subset-sum bitset DP, exhaustive matching search) so the two can validate
one another.  All functions consume certified terms from the derivation
module through a MonotoneCounter; nothing here re-sieves.
"""

from dataclasses import dataclass

import numpy as np

from .errors import Infeasible, NoRepresentation, OracleTooLarge, OutOfRange, RkitError
from .seed_tables import BASE_PAIRINGS, BASE_REPRESENTATIONS, SOLVABLE_RESIDUALS
from .sequences import MonotoneCounter

RICHERT_ANCHOR = 122  # largest integer with no representation
_BASE_LO = min(BASE_REPRESENTATIONS)  # 123
_BASE_HI = max(BASE_REPRESENTATIONS)  # 224


@dataclass(frozen=True)
class Representation:
    """target written as a sum of pairwise distinct Ramanujan primes."""

    target: int
    parts: tuple[int, ...]  # strictly decreasing


@dataclass(frozen=True)
class RichertInduction:
    """One step of the coverage induction behind the representation theorem.

    With m_i the i-th Ramanujan prime: if every integer in [a+1, a+s] is a
    sum of distinct terms and s >= m_{r+1}, then adding m_{r+1} extends the
    covered window by s' = s + m_{r+1}.
    """

    a: int
    r: int
    s: int
    base_window: tuple[int, int]  # covered interval [a+1, a+s]


@dataclass(frozen=True)
class Pairing:
    """Perfect pairing of {1..2k} whose pair sums are Ramanujan primes.

    base_pairs lists explicit pairs covering {1..base_end}; blocks are
    symmetric runs (lo, hi) standing for {lo, hi}, {lo+1, hi-1}, ... with
    constant pair sum lo + hi.
    """

    k: int
    base_pairs: tuple[tuple[int, int], ...]
    blocks: tuple[tuple[int, int], ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        out = list(self.base_pairs)
        for lo, hi in self.blocks:
            out.extend((lo + i, hi - i) for i in range((hi - lo + 1) // 2))
        return out

    @property
    def sums(self) -> list[int]:
        return [a + b for a, b in self.pairs]


def _is_member(ram: MonotoneCounter, value: int) -> bool:
    pos = int(np.searchsorted(ram.elements, value))
    return pos < len(ram.elements) and int(ram.elements[pos]) == value


def verify_seed_tables(ram: MonotoneCounter) -> None:
    """Re-check every seed row against certified sequence data."""
    for target, parts in BASE_REPRESENTATIONS.items():
        ok, reason = verify_representation(Representation(target, parts), ram)
        if not ok:
            raise RkitError(f"seed representation for {target} invalid: {reason}")
    for k, pairs in BASE_PAIRINGS.items():
        ok, reason = verify_pairing(Pairing(k, pairs, ()), ram)
        if not ok:
            raise RkitError(f"seed pairing for k={k} invalid: {reason}")


def verify_representation(rep: Representation, ram: MonotoneCounter) -> tuple[bool, str]:
    """Check the three representation invariants; returns (ok, reason)."""
    parts = rep.parts
    if sum(parts) != rep.target:
        return False, "sum-mismatch"
    if len(set(parts)) != len(parts):
        return False, "duplicate-part"
    for p in parts:
        if not _is_member(ram, p):
            return False, f"not-ramanujan:{p}"
    return True, "ok"


def _bounded_representation(n: int, ram: MonotoneCounter, max_part: int) -> tuple[int, ...]:
    """Witness for n by subset DP over terms <= max_part (deterministic)."""
    usable = [int(v) for v in ram.elements_in_range(2, min(n, max_part) + 1)][::-1]
    parent: dict[int, tuple[int, int]] = {0: (0, -1)}  # total -> (part, prev_total)
    for p in usable:
        for total in sorted(parent, reverse=True):
            nxt = total + p
            if nxt <= n and nxt not in parent:
                parent[nxt] = (p, total)
    if n not in parent:
        raise NoRepresentation(f"{n} is not a sum of distinct Ramanujan primes <= {max_part}")
    parts = []
    cur = n
    while cur:
        p, cur = parent[cur]
        parts.append(p)
    return tuple(sorted(parts, reverse=True))


def richert_represent(n: int, ram: MonotoneCounter) -> Representation:
    """Express n as a sum of distinct Ramanujan primes.

    For n >= 225 the largest term m with n - m >= 123 (or n - m = 0) is
    peeled off greedily; the remainder falls back to the verified seed
    window [123, 224].  The remainder shrinks below (n + 123)/2 + gap each
    step, so peeled terms strictly decrease and never collide with the seed
    rows, whose parts are at most 101.  Small n use exhaustive DP and may
    legitimately raise NoRepresentation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ram.source_limit:
        raise OutOfRange(
            f"need certified Ramanujan primes up to {n}, counter covers {ram.source_limit}",
            required_limit=2 * n,
        )
    if n < _BASE_LO:
        return Representation(n, _bounded_representation(n, ram, n))

    peeled: list[int] = []
    rest = n
    while rest > _BASE_HI:
        if _is_member(ram, rest):
            peeled.append(rest)
            rest = 0
            break
        usable = ram.elements_in_range(2, rest - _BASE_LO + 1)
        if len(usable) == 0:
            raise RkitError(f"no peelable term for {rest}")  # unreachable for rest > 224
        m = int(usable[-1])
        peeled.append(m)
        rest -= m
    base = BASE_REPRESENTATIONS[rest] if rest else ()
    parts = tuple(sorted(peeled + list(base), reverse=True))
    rep = Representation(n, parts)
    ok, reason = verify_representation(rep, ram)
    if not ok:
        raise RkitError(f"constructed representation for {n} failed validation: {reason}")
    return rep


def representable_mask(scan_limit: int, ram: MonotoneCounter) -> np.ndarray:
    """Bool array over [0, scan_limit]: reachable sums of distinct terms.

    Single-bitset subset-sum DP; each term is folded in once, so sums use
    every Ramanujan prime at most once.
    """
    if scan_limit > ram.source_limit:
        raise OutOfRange(
            f"scan to {scan_limit} needs certified terms that far", required_limit=2 * scan_limit
        )
    mask_bits = 1  # bit 0: empty sum
    keep = (1 << (scan_limit + 1)) - 1
    for p in ram.elements_in_range(2, scan_limit + 1):
        mask_bits |= (mask_bits << int(p)) & keep
    raw = np.frombuffer(
        mask_bits.to_bytes((scan_limit + 8) // 8, "little"), dtype=np.uint8
    )
    out = np.unpackbits(raw, bitorder="little")[: scan_limit + 1].astype(bool)
    out[0] = False  # the empty sum does not represent 0
    return out


def largest_unrepresentable(scan_limit: int, ram: MonotoneCounter) -> int:
    """Largest n <= scan_limit that is not a sum of distinct Ramanujan primes."""
    if scan_limit < 500:
        raise ValueError("scan_limit must be >= 500 to bracket the last exception")
    gaps = np.flatnonzero(~representable_mask(scan_limit, ram))
    return int(gaps[-1])


def richert_induction(ram: MonotoneCounter, steps: int) -> list[RichertInduction]:
    """Coverage ledger: grow the representable window from the seed table.

    The seed rows use terms up to 101 (the 11th Ramanujan prime) but span
    only 102 integers, one short of absorbing the 12th term 107, so the
    window is first widened by explicit DP witnesses drawn from the same
    terms.  From there each step adds the next Ramanujan prime m_{r+1},
    which is valid while the window width s satisfies s >= m_{r+1}; the
    recurrence s' = s + m_{r+1} then keeps coverage gap-free, and the
    doubling density of the terms keeps the side condition alive.
    """
    a = RICHERT_ANCHOR
    hi = _BASE_HI
    max_part = max(p for parts in BASE_REPRESENTATIONS.values() for p in parts)
    r = ram.rank(max_part)  # seed rows draw on the first r terms
    s = hi - a
    while s < ram.select(r + 1):
        hi += 1
        _bounded_representation(hi, ram, max_part)  # raises if the window cannot grow
        s += 1
    ledger = [RichertInduction(a=a, r=r, s=s, base_window=(a + 1, a + s))]
    for _ in range(steps):
        m_next = ram.select(r + 1)
        if s < m_next:
            raise RkitError(f"induction stalled: window {s} < next term {m_next}")
        s += m_next
        r += 1
        ledger.append(RichertInduction(a=a, r=r, s=s, base_window=(a + 1, a + s)))
    return ledger


def verify_pairing(pairing: Pairing, ram: MonotoneCounter) -> tuple[bool, str]:
    """Exact check: pairs partition {1..2k} and every sum is a Ramanujan prime."""
    k = pairing.k
    seen: set[int] = set()
    for a, b in pairing.base_pairs:
        if not _is_member(ram, a + b):
            return False, f"sum-not-ramanujan:{a}+{b}"
        seen.update((a, b))
    covered = len(seen)
    if len(pairing.base_pairs) * 2 != covered:
        return False, "duplicate-in-base"
    prev_hi = 0
    for lo, hi in sorted(pairing.blocks):
        if lo <= prev_hi or (hi - lo + 1) % 2 or lo in seen or hi in seen:
            return False, f"block-overlap:{lo},{hi}"
        if not _is_member(ram, lo + hi):
            return False, f"sum-not-ramanujan:{lo}+{hi}"
        covered += hi - lo + 1
        prev_hi = hi
        seen.add(lo)
        seen.add(hi)
    if covered != 2 * k:
        return False, "coverage-gap"
    if not all(1 <= v <= 2 * k for v in seen):
        return False, "out-of-domain"
    # contiguity: base must cover exactly {1..base_end}, blocks the rest
    base_vals = sorted(v for a, b in pairing.base_pairs for v in (a, b))
    if base_vals != list(range(1, len(base_vals) + 1)):
        return False, "base-not-contiguous"
    return True, "ok"


def greenfield_pairing(k: int, ram: MonotoneCounter) -> Pairing:
    """Partition {1..2k} into k pairs whose sums are all Ramanujan primes.

    Solvable k <= 17 come straight from the verified seed table.  For
    k >= 18, scan odd j >= 17 ascending until 2k + j is a Ramanujan prime
    and the residual {1..j-1} is itself pairable; {j..2k} then pairs
    symmetrically with constant sum 2k + j and the residual recurses.
    Choosing the smallest such j keeps the output deterministic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if 4 * k - 1 > ram.source_limit:
        raise OutOfRange(
            f"need certified Ramanujan primes up to {4 * k - 1}", required_limit=8 * k
        )
    if k in BASE_PAIRINGS:
        return Pairing(k, BASE_PAIRINGS[k], ())
    if k <= 17:
        raise Infeasible(f"{{1..{2 * k}}} admits no Ramanujan-sum pairing")

    blocks: list[tuple[int, int]] = []
    cur = k
    while cur > 17 or cur not in BASE_PAIRINGS:
        j = None
        for cand in range(17, 2 * cur, 2):
            residual = cand - 1
            if residual not in SOLVABLE_RESIDUALS and residual < 34:
                continue
            if _is_member(ram, 2 * cur + cand):
                j = cand
                break
        if j is None:
            raise RkitError(f"pairing construction found no usable j for k={cur}")
        blocks.append((j, 2 * cur))
        cur = (j - 1) // 2
    pairing = Pairing(k, BASE_PAIRINGS[cur], tuple(reversed(blocks)))
    ok, reason = verify_pairing(pairing, ram)
    if not ok:
        raise RkitError(f"constructed pairing for k={k} failed validation: {reason}")
    return pairing


def pairing_oracle(k: int, ram: MonotoneCounter) -> Pairing:
    """Exhaustive matching search over {1..2k}; validates the constructor.

    Independent of the recursive construction: plain backtracking that
    always extends the unpaired element with the fewest remaining partners.
    Raises Infeasible when the search space is exhausted, OracleTooLarge
    past k = 20.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 20:
        raise OracleTooLarge("exhaustive pairing search is capped at k = 20")
    if 4 * k - 1 > ram.source_limit:
        raise OutOfRange(
            f"need certified Ramanujan primes up to {4 * k - 1}", required_limit=8 * k
        )
    members = {int(v) for v in ram.elements_in_range(2, 4 * k)}
    n = 2 * k
    partners = {
        v: [w for w in range(1, n + 1) if w != v and v + w in members] for v in range(1, n + 1)
    }
    unused = set(range(1, n + 1))
    chosen: list[tuple[int, int]] = []

    def pick() -> int:
        return min(unused, key=lambda v: (sum(1 for w in partners[v] if w in unused), v))

    def rec() -> bool:
        if not unused:
            return True
        v = pick()
        unused.discard(v)
        for w in partners[v]:
            if w in unused:
                unused.discard(w)
                chosen.append((v, w) if v < w else (w, v))
                if rec():
                    return True
                chosen.pop()
                unused.add(w)
        unused.add(v)
        return False

    if not rec():
        raise Infeasible(f"{{1..{2 * k}}} admits no Ramanujan-sum pairing")
    return Pairing(k, tuple(sorted(chosen)), ())

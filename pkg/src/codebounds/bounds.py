"""Feasibility predicates and max-dimension computations for code bounds.

The central bound ("bound A") refutes the existence of an (n, k, q) systematic
code of minimum distance >= d by counting: vectors of weight i in the message
block must map injectively to tails of weight >= d - i, so for every i with
1 <= i <= (d-1)//2 the count C(k, i)(q-1)**i cannot exceed the tail mass.
Classical comparison bounds (Griesmer, Singleton, Hamming, Plotkin, Elias,
Levenshtein) are implemented alongside it, all in exact integer or rational
arithmetic.

Everything here is stateless and pure; table sweeps may call in parallel.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .exactmath import VARIANT_WEIGHT, VARIANTS, floor_log_q, sphere_volume
from .levenshtein import levenshtein_max_size

__all__ = [
    "FEASIBLE",
    "REFUTED",
    "NOT_APPLICABLE",
    "BOUND_IDS",
    "BoundQuery",
    "FeasibilityVerdict",
    "BoundResult",
    "bound_a_check",
    "bound_a_max_k",
    "griesmer_max_k",
    "singleton_max_k",
    "hamming_max_size",
    "plotkin_max_size",
    "elias_max_size",
    "levenshtein_max_size",
    "max_k_of",
    "best_upper_k",
]

FEASIBLE = "feasible"
REFUTED = "refuted"
NOT_APPLICABLE = "not-applicable"

# evaluation order is alphabetical so reports are deterministic
BOUND_IDS = ("a", "elias", "griesmer", "hamming", "levenshtein", "plotkin", "singleton")


def _check_query(n: int, d: int, q: int) -> None:
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got q={q}")
    if n < 1:
        raise ValueError(f"length must be positive, got n={n}")
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got d={d}, n={n}")


@dataclass(frozen=True)
class BoundQuery:
    """One (n, d, q) question, with the tail-mass variant used by bound A."""

    n: int
    d: int
    q: int
    variant_a: str = VARIANT_WEIGHT

    def __post_init__(self) -> None:
        _check_query(self.n, self.d, self.q)
        if self.variant_a not in VARIANTS:
            raise ValueError(f"variant_a must be one of {VARIANTS}, got {self.variant_a!r}")


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of one bound-A check at fixed (n, k, d, q).

    status is refuted only together with a witness: the smallest i whose
    inequality fails, plus the offending lhs/rhs pair.
    """

    status: str
    witness: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED


@dataclass(frozen=True)
class BoundResult:
    """Per-bound answer for one query: a dimension cap, and for size-based
    bounds also the cap on the number of codewords it was derived from."""

    bound_id: str
    k_max: Optional[int]
    size_max: Optional[int] = None
    witness: Optional[int] = None

    @property
    def applicable(self) -> bool:
        return self.k_max is not None


def bound_a_check(n: int, k: int, d: int, q: int, variant: str = VARIANT_WEIGHT) -> FeasibilityVerdict:
    """Test every admissible i of the counting inequality at fixed dimension k.

    Not applicable unless n > k > 2 and d >= 3.  Otherwise, for each i with
    1 <= i <= (d-1)//2 compares lhs = C(k, i)(q-1)**i against the tail mass
    over m = n - k positions with minimum weight d - i (variant "weight":
    sum C(m, j)(q-1)**j; variant "literal": (q-1)**i * sum C(m, j)).  Returns
    the first violated i as the refutation witness.

    The per-i terms are updated by ratio rather than recomputed, so a full
    check costs O(n) big-integer operations.
    """
    _check_query(n, d, q)
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if k < 1:
        raise ValueError(f"dimension must be positive, got k={k}")
    if k <= 2 or k >= n or d < 3:
        return FeasibilityVerdict(NOT_APPLICABLE)

    m = n - k
    i_max = (d - 1) // 2
    lhs = k * (q - 1)  # C(k, 1)(q-1)**1

    # Tail sums grow one term at a time as i rises: the lower limit d - i
    # walks down from d - 1, and term tracks the summand at the current lower
    # limit j (C(m, j)(q-1)**j for "weight", bare C(m, j) for "literal").
    weighted = variant == VARIANT_WEIGHT
    tail = 0
    term = None
    j = m
    pw = q - 1  # (q-1)**i, literal variant only
    for i in range(1, i_max + 1):
        lo = d - i
        if lo <= m:
            if term is None:
                term = (q - 1) ** m if weighted else 1  # summand at j = m
                tail = term
            while j > lo:
                if weighted:
                    term = term * j // ((m - j + 1) * (q - 1))
                else:
                    term = term * j // (m - j + 1)
                j -= 1
                tail += term
            rhs = tail if weighted else pw * tail
        else:
            rhs = 0
        if lhs > rhs:
            return FeasibilityVerdict(REFUTED, witness=i, lhs=lhs, rhs=rhs)
        lhs = lhs * (k - i) * (q - 1) // (i + 1)
        pw *= q - 1
    return FeasibilityVerdict(FEASIBLE)


def max_k_of(predicate: Callable[[int], bool], k_lo: int, k_hi: int) -> int:
    """Largest k in [k_lo, k_hi] with predicate(k) true, or k_lo - 1 if none.

    Requires the predicate to be antitone (false at k implies false at every
    larger k), which lets a binary search stand in for a linear scan.
    """
    if k_lo > k_hi:
        raise ValueError(f"empty dimension range [{k_lo}, {k_hi}]")
    lo, hi = k_lo, k_hi
    best = k_lo - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return best


def bound_a_max_k(n: int, d: int, q: int, variant: str = VARIANT_WEIGHT) -> int:
    """Largest k in 3..n-1 not refuted by bound A; 2 when even k = 3 fails.

    Dimensions k <= 2 are outside the bound's guard and can never be
    constrained, hence the floor of 2.  Refutation is monotone in k (the lhs
    grows, the tail shrinks), so the scan is a binary search.
    """
    _check_query(n, d, q)
    if d < 3:
        raise ValueError(f"bound A needs d >= 3, got d={d}")
    if n < 4:
        raise ValueError(f"bound A needs n >= 4, got n={n}")
    return max_k_of(lambda k: not bound_a_check(n, k, d, q, variant).refuted, 3, n - 1)


def griesmer_max_k(n: int, d: int, q: int) -> int:
    """Largest k >= 1 with sum_{i=0..k-1} ceil(d / q**i) <= n (linear codes)."""
    _check_query(n, d, q)
    total = 0
    k = 0
    power = 1
    while True:
        term = -(-d // power)  # ceil
        if total + term > n:
            return k
        total += term
        k += 1
        if term == 1:
            # every further term is 1: the remaining room is n - total
            return k + (n - total)
        power *= q


def singleton_max_k(n: int, d: int) -> int:
    """k <= n - d + 1 for any code."""
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got d={d}, n={n}")
    return n - d + 1


def hamming_max_size(n: int, d: int, q: int) -> int:
    """Sphere-packing cap floor(q**n / V_q(n, (d-1)//2)) on the codeword count."""
    _check_query(n, d, q)
    t = (d - 1) // 2
    return q ** n // sphere_volume(n, t, q)


def plotkin_max_size(n: int, d: int, q: int) -> Optional[int]:
    """floor(d / (d - (1 - 1/q) n)) when d exceeds (1 - 1/q) n, else None."""
    _check_query(n, d, q)
    theta_n = Fraction((q - 1) * n, q)
    if d <= theta_n:
        return None
    value = Fraction(d) / (d - theta_n)
    return value.numerator // value.denominator


def elias_max_size(n: int, d: int, q: int) -> tuple[int, int]:
    """Smallest floored Elias cap over admissible radii, with the witness w.

    For each integer w with 0 <= w <= r and w**2 - 2rw + rd > 0 (r = (1-1/q)n)
    the cap is (rd / (w**2 - 2rw + rd)) * q**n / V_q(n, w); the minimum over w
    is returned together with the smallest w attaining it.  w = 0 is always
    admissible, so the bound always applies.
    """
    _check_query(n, d, q)
    r = Fraction((q - 1) * n, q)
    rd = r * d
    qn = q ** n
    volume = 0
    term = 1  # C(n, w)(q-1)**w at current w
    best: Optional[int] = None
    best_w = 0
    w = 0
    while w <= r:
        if w == 0:
            volume = 1
        else:
            term = term * (n - w + 1) * (q - 1) // w
            volume += term
        denom = Fraction(w * w) - 2 * r * w + rd
        if denom > 0:
            value = rd / denom * Fraction(qn, volume)
            floored = value.numerator // value.denominator
            if best is None or floored < best:
                best = floored
                best_w = w
        w += 1
    assert best is not None  # w = 0 always admissible
    return best, best_w


def _eval_bound(bound_id: str, n: int, d: int, q: int, variant: str) -> BoundResult:
    if bound_id == "a":
        if d < 3 or n < 4:
            return BoundResult("a", None)
        return BoundResult("a", bound_a_max_k(n, d, q, variant))
    if bound_id == "griesmer":
        return BoundResult("griesmer", griesmer_max_k(n, d, q))
    if bound_id == "singleton":
        return BoundResult("singleton", singleton_max_k(n, d))
    if bound_id == "hamming":
        size = hamming_max_size(n, d, q)
        return BoundResult("hamming", floor_log_q(size, q), size_max=size)
    if bound_id == "plotkin":
        size = plotkin_max_size(n, d, q)
        if size is None:
            return BoundResult("plotkin", None)
        return BoundResult("plotkin", floor_log_q(size, q), size_max=size)
    if bound_id == "elias":
        size, w = elias_max_size(n, d, q)
        return BoundResult("elias", floor_log_q(size, q), size_max=size, witness=w)
    if bound_id == "levenshtein":
        size = levenshtein_max_size(n, d, q)
        return BoundResult("levenshtein", floor_log_q(size, q), size_max=size)
    raise ValueError(f"unknown bound id {bound_id!r}")


def best_upper_k(
    n: int,
    d: int,
    q: int,
    bounds: Iterable[str] = BOUND_IDS,
    variant: str = VARIANT_WEIGHT,
) -> tuple[list[BoundResult], Optional[int]]:
    """Evaluate each selected bound and report the minimum applicable cap.

    Results come back in deterministic (alphabetical) bound-id order; a bound
    that does not apply contributes a k_max of None without failing the query.
    """
    _check_query(n, d, q)
    selected = set(bounds)
    unknown = selected.difference(BOUND_IDS)
    if unknown:
        raise ValueError(f"unknown bound ids: {sorted(unknown)}")
    results = [_eval_bound(b, n, d, q, variant) for b in sorted(selected, key=BOUND_IDS.index)]
    applicable = [r.k_max for r in results if r.k_max is not None]
    return results, (min(applicable) if applicable else None)

"""Levenshtein-style upper bound on code size via Krawtchouk kernel polynomials.

Construction.  For the q-ary Hamming scheme on n points, a polynomial f with

    f(0) > 0,   f(j) <= 0 for j = d..n,   and nonnegative Krawtchouk
    coefficients f_i for every i >= 1 with f_0 > 0

certifies A_q(n, d) <= f(0) / f_0 (the classical positive-definiteness
argument on the distance distribution).  Levenshtein's polynomials are built
from Christoffel-Darboux kernels of the systems "adjacent" to the Krawtchouk
weight w(x) = C(n, x)(q-1)**x:

  odd branch    f(x) = (d - x) * T(x)**2,
                T = CD kernel of degree c over the weight w(x) * x, which is
                the Krawtchouk system on n - 1 evaluated at x - 1, taken at
                the point pair (x - 1, d - 1);

  even branch   f(x) = (d - x)(n - x) * T(x)**2,
                T likewise for the weight w(x) * x * (n - x), i.e. the system
                on n - 2 at x - 1.

Both shapes make f(j) <= 0 on d..n automatic, so only the coefficient signs
need checking; that check is performed exactly (big integers throughout), and
a candidate degree is used only after it passes.  The reported bound is the
floored minimum over all verified candidates, never exceeding the trivial
q**n.  Every returned value is therefore a sound upper bound regardless of
which degrees happen to verify.

For n above _EXHAUSTIVE_N the degree scan stops once the bound has not
improved for a few verified degrees in a row (the minimum sits at the first
verified degrees in practice); below it the scan is exhaustive.  Results are
deterministic either way.
"""

from fractions import Fraction
from math import comb, lcm

from .exactmath import _poly_binomial

__all__ = ["levenshtein_max_size"]

_EXHAUSTIVE_N = 120
_PATIENCE = 3


class _KrawtchoukRows:
    """Lazy table of K_i(y) for the scheme on m symbols-length, at fixed
    integer points (polynomial extension, so negative points are fine)."""

    def __init__(self, m: int, q: int, points: list[int]):
        self.m = m
        self.q = q
        self.points = points
        self._rows = [[1] * len(points)]

    def row(self, i: int) -> list[int]:
        m, q, pts = self.m, self.q, self.points
        while len(self._rows) <= i:
            r = len(self._rows)
            if r == 1:
                self._rows.append([m * (q - 1) - q * y for y in pts])
                continue
            prev, cur = self._rows[r - 2], self._rows[r - 1]
            i0 = r - 1
            nxt = []
            for idx, y in enumerate(pts):
                num = (i0 + (q - 1) * (m - i0) - q * y) * cur[idx] - (q - 1) * (m - i0 + 1) * prev[idx]
                nxt.append(num // r)
            self._rows.append(nxt)
        return self._rows[i]


def _kraw_at(m: int, q: int, i: int, y: int) -> int:
    return sum(
        (-1) ** j * _poly_binomial(y, j) * _poly_binomial(m - y, i - j) * (q - 1) ** (i - j)
        for j in range(i + 1)
    )


def _branch_min(
    n: int,
    d: int,
    q: int,
    m: int,
    factor: list[int],
    weights: list[int],
    big_rows: _KrawtchoukRows,
    exhaustive: bool,
) -> int | None:
    """Minimum verified bound for one branch (kernel system on m)."""
    if m < 1:
        return None
    qn = q ** n
    pts = [x - 1 for x in range(n + 1)]
    rows = _KrawtchoukRows(m, q, pts)
    kernel = [Fraction(0)] * (n + 1)
    best: int | None = None
    seen_since_improved = 0
    for c in range(0, m + 1):
        kd = _kraw_at(m, q, c, d - 1)
        norm = comb(m, c) * (q - 1) ** c
        row = rows.row(c)
        for x in range(n + 1):
            kernel[x] += Fraction(row[x] * kd, norm)
        scale = 1
        for t in kernel:
            scale = lcm(scale, t.denominator)
        tvals = [int(t * scale) for t in kernel]
        f = [factor[x] * tvals[x] * tvals[x] for x in range(n + 1)]
        if f[0] <= 0:
            continue
        g = [weights[x] * f[x] for x in range(n + 1)]
        f0_sum = sum(g)
        if f0_sum <= 0:
            continue
        value = f[0] * qn // f0_sum
        if best is not None and value >= best:
            # cannot improve the minimum, so feasibility need not be checked
            seen_since_improved += 1
            if not exhaustive and seen_since_improved >= _PATIENCE:
                break
            continue
        # deg f <= 2c + 2, and expansions over the n + 1 points are complete
        # at degree n, so higher coefficients are identically zero
        i_hi = min(2 * c + 2, n)
        bad = False
        for i in range(1, i_hi + 1):
            ki = big_rows.row(i)
            acc = 0
            for x in range(n + 1):
                acc += g[x] * ki[x]
            if acc < 0:
                bad = True
                break
        if bad:
            continue
        best = value
        seen_since_improved = 0
    return best


def levenshtein_max_size(n: int, d: int, q: int) -> int:
    """Exact upper bound on the number of codewords of a q-ary (n, d) code."""
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got q={q}")
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got d={d}, n={n}")
    trivial = q ** n
    if n < 3 or d == 1:
        return trivial
    weights = [comb(n, x) * (q - 1) ** x for x in range(n + 1)]
    big_rows = _KrawtchoukRows(n, q, list(range(n + 1)))
    exhaustive = n <= _EXHAUSTIVE_N
    odd = _branch_min(
        n, d, q, n - 1,
        [d - x for x in range(n + 1)],
        weights, big_rows, exhaustive,
    )
    even = _branch_min(
        n, d, q, n - 2,
        [(d - x) * (n - x) for x in range(n + 1)],
        weights, big_rows, exhaustive,
    )
    candidates = [v for v in (odd, even, trivial) if v is not None]
    return min(candidates)

"""Tail rates for the maximum of a uniform Dyck path.

Three regimes are covered:

* moderate (N >> n^2, n -> infinity): (n+1)^2/N log P(max < n) -> -pi^2;
* gaussian (n << N << n^2): N/(2n^2) log P(max > xn) -> -x^2;
* cramer (n ~ 2N): 1/(2N) log P(max > 2Nx) -> h(x).

Upper-tail events are strict: "max > m" for an integer m, i.e. max >= m + 1.
Heights x*n are rounded half away from zero and the rounded m is reported on
every diagnostic.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

from .exact_counts import (catalan, count_at_least, count_bounded,
                           count_peak_at_midpoint, count_touch_upper_bound)
from .spectral import log_spectral_ratio

NEG_INF = -math.inf
MODERATE_LIMIT = -math.pi ** 2


class RegimeWarning(UserWarning):
    """Parameters sit outside the asymptotic regime of a rate statement."""


@dataclass
class RateDiagnostic:
    regime: str
    N: int
    n: Optional[int]
    x: Optional[float]
    m: Optional[int]
    prelimit: float
    limit: float
    extrapolated: bool = False
    bounds: Optional[dict] = field(default=None, repr=False)

    @property
    def gap(self) -> float:
        if self.prelimit == self.limit:
            # covers the degenerate -inf == -inf case
            return 0.0
        return abs(self.prelimit - self.limit)

    def as_row(self) -> dict:
        row = {
            "regime": self.regime, "N": self.N, "n": self.n, "x": self.x,
            "m": self.m, "prelimit": self.prelimit, "limit": self.limit,
            "gap": self.gap, "extrapolated": self.extrapolated,
        }
        if self.bounds:
            row.update(self.bounds)
        return row


def round_half_away(v: float) -> int:
    return int(math.copysign(math.floor(abs(v) + 0.5), v))


def _log_ratio(num: int, den: int) -> float:
    if num == 0:
        return NEG_INF
    return math.log(num) - math.log(den)


# -- moderate regime ---------------------------------------------------------

def md_rate_prelimit(N: int, n: int) -> RateDiagnostic:
    """(n+1)^2/N log P_N(max < n) against the limit -pi^2."""
    if N < 1 or n < 2:
        raise ValueError("need N >= 1 and n >= 2")
    lr = log_spectral_ratio(N, n)
    if not math.isfinite(lr):
        raise ArithmeticError("bounded probability vanished")
    return RateDiagnostic("moderate", N, n, None, None,
                          prelimit=(n + 1) ** 2 / N * lr, limit=MODERATE_LIMIT)


def md_rate_prelimit_exact(N: int, n: int) -> RateDiagnostic:
    """Same quantity from big-int counts (slow for large N)."""
    if N < 1 or n < 2:
        raise ValueError("need N >= 1 and n >= 2")
    lr = _log_ratio(count_bounded(N, n), catalan(N))
    return RateDiagnostic("moderate", N, n, None, None,
                          prelimit=(n + 1) ** 2 / N * lr, limit=MODERATE_LIMIT)


def md_fixed_n_limit(n: int) -> float:
    """N -> infinity limit of (n+1)^2/N log P_N(max < n) with n held fixed.

    Equals 2 (n+1)^2 log cos(pi/(n+1)), which tends to -pi^2 only as n grows.
    """
    th = math.pi / (n + 1)
    return 2.0 * (n + 1) ** 2 * math.log(math.cos(th))


def md_asymptotic_log(N: int, n: int) -> float:
    """Two-term approximation log(4 pi^{5/2} N^{3/2} / (n+1)^3) - pi^2 N/(n+1)^2
    of log P_N(max < n).

    The prefactor is 4 sqrt(pi) N^{3/2}/(n+1) times sin^2(pi/(n+1)) ~ pi^2/(n+1)^2.
    The error vanishes only when N/n^4 -> 0; at fixed n it grows like
    N pi^4 / (6 (n+1)^4), from cos^{2N} versus exp(-N pi^2/(n+1)^2).
    """
    return (math.log(4.0 * math.pi ** 2.5 * N ** 1.5 / (n + 1) ** 3)
            - math.pi ** 2 * N / (n + 1) ** 2)


# -- upper tail --------------------------------------------------------------

def upper_tail_prob_exact(N: int, m: int) -> float:
    """log P_N(max > m) from exact counts; -inf when m >= N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m >= N:
        return NEG_INF
    return _log_ratio(count_at_least(N, m + 1), catalan(N))


def gaussian_bounds(N: int, m: int) -> dict:
    """Reflection sandwich for the event max >= m, at the count level.

    The lower bound counts paths at height m (or m + 1 when N + m is odd)
    after N steps; the upper bound is 2 binom(2N, N + m).
    """
    level = m if (N + m) % 2 == 0 else m + 1
    lower = count_peak_at_midpoint(N, level) if level <= N else 0
    upper = count_touch_upper_bound(N, m)
    exact = count_at_least(N, m)
    return {"lower_count": lower, "exact_count": exact, "upper_count": upper,
            "lower_level": level}


def _regime_check(N: int, n: int):
    if not n <= N <= n * n:
        warnings.warn(f"(N={N}, n={n}) is outside n <= N <= n^2", RegimeWarning,
                      stacklevel=3)


def ld_gaussian_prelimit(N: int, n: int, x: float) -> RateDiagnostic:
    """N/(2n^2) log P_N(max > m), m = round(x n), against -x^2.

    ``bounds`` carries the exact sandwich for P(max >= m) together with its
    normalized log values, so the bracket can be checked both exactly and on
    the reported scale.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    m = round_half_away(x * n)
    if m < 1 or m > N:
        raise ValueError(f"rounded height m={m} must lie in [1, N={N}]")
    _regime_check(N, n)
    norm = N / (2.0 * n * n)
    cat = catalan(N)
    b = gaussian_bounds(N, m)
    bounds = dict(b)
    bounds["lower_norm"] = norm * _log_ratio(b["lower_count"], cat)
    bounds["touch_norm"] = norm * _log_ratio(b["exact_count"], cat)
    bounds["upper_norm"] = norm * _log_ratio(b["upper_count"], cat)
    bounds["bracketed"] = b["lower_count"] <= b["exact_count"] <= b["upper_count"]
    return RateDiagnostic("gaussian", N, n, x, m,
                          prelimit=norm * upper_tail_prob_exact(N, m),
                          limit=-x * x, bounds=bounds)


def gaussian_remark_prelimit(N: int, n: int) -> RateDiagnostic:
    """N/n^2 log P_N(max > n) against -2 (the x = 1 edge, flagged extrapolated)."""
    if n < 1 or n > N:
        raise ValueError("need 1 <= n <= N")
    return RateDiagnostic("gaussian-x1", N, n, 1.0, n,
                          prelimit=N / (n * n) * upper_tail_prob_exact(N, n),
                          limit=-2.0, extrapolated=True)


# -- cramer regime -----------------------------------------------------------

def h_rate(x: float) -> float:
    """-(x+1/2) log(1+2x) - (1/2-x) log(1-2x) on (0, 1/2]; -inf beyond 1/2."""
    if not x > 0:
        raise ValueError("x must be positive")
    if x > 0.5:
        return NEG_INF
    if x == 0.5:
        return -math.log(2.0)
    return -(x + 0.5) * math.log1p(2 * x) - (0.5 - x) * math.log1p(-2 * x)


def cramer_prelimit(N: int, x: float) -> RateDiagnostic:
    """1/(2N) log P_N(max > round(2Nx)) against h(x).

    When the rounded level reaches N (x = 1/2) the strict event is empty; the
    diagnostic then uses the single tallest path, P(max = N) = 1/C_N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if not x > 0:
        raise ValueError("x must be positive")
    m = round_half_away(2 * N * x)
    if m < 1:
        raise ValueError(f"rounded height m={m} must be >= 1")
    if x > 0.5:
        logp = NEG_INF
    elif m >= N:
        m = N
        logp = -math.log(catalan(N))
    else:
        logp = upper_tail_prob_exact(N, m)
    return RateDiagnostic("cramer", N, None, x, m,
                          prelimit=logp / (2 * N), limit=h_rate(x))


def md_prelimit_sequence(n: int, Ns: List[int]) -> List[RateDiagnostic]:
    return [md_rate_prelimit(N, n) for N in Ns]

"""Spectral evaluation of height-bounded Dyck path counts.

The path graph on n vertices has eigenvalues 2cos(pi k / (n + 1)) with
sine eigenvectors, so

    |D_{2N,n}| = sum_{s=1}^{n} 2/(n+1) sin^2(theta_s) (2 cos theta_s)^{2N},
    theta_s = pi s / (n + 1).

Every term is nonnegative.  Terms s and n + 1 - s have the same magnitude.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, List, Sequence

# binary exponent of 4^N must stay below the float maximum minus this margin
RANGE_MARGIN_BITS = 64


class FloatRangeError(OverflowError):
    """The direct sum would overflow a double; use :func:`log_spectral_ratio`."""


@dataclass(frozen=True)
class SpectralSum:
    N: int
    n: int
    terms: List[float]
    total: float


def _theta(s: int, n: int) -> float:
    return math.pi * s / (n + 1)


def _is_zero_mode(s: int, n: int) -> bool:
    # cos(pi/2) is not exactly 0 in floating point
    return 2 * s == n + 1


def eigenvalues(n: int) -> List[float]:
    """2cos(pi k/(n+1)) for k = 1..n, in decreasing order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for k in range(1, n + 1):
        if _is_zero_mode(k, n):
            out.append(0.0)
        elif 2 * k < n + 1:
            out.append(2.0 * math.cos(_theta(k, n)))
        else:
            out.append(-2.0 * math.cos(_theta(n + 1 - k, n)))
    return out


def g_term(N: int, n: int, s: int) -> float:
    """sin^2(theta_s) * cos^{2N}(theta_s)."""
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got s={s}, n={n}")
    s = min(s, n + 1 - s)
    if _is_zero_mode(s, n):
        return 1.0 if N == 0 else 0.0
    th = _theta(s, n)
    return math.sin(th) ** 2 * math.cos(th) ** (2 * N)


def _log_cos(th: float) -> float:
    # log(cos th) = log1p(-2 sin^2(th/2)), accurate for small th
    return math.log1p(-2.0 * math.sin(0.5 * th) ** 2)


def log_g_term(N: int, n: int, s: int) -> float:
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got s={s}, n={n}")
    s = min(s, n + 1 - s)
    if _is_zero_mode(s, n):
        return 0.0 if N == 0 else -math.inf
    th = _theta(s, n)
    return 2.0 * math.log(math.sin(th)) + 2 * N * _log_cos(th)


def max_safe_N() -> int:
    return (sys.float_info.max_exp - RANGE_MARGIN_BITS) // 2


def spectral_sum(N: int, n: int) -> SpectralSum:
    if N < 0 or n < 1:
        raise ValueError("need N >= 0 and n >= 1")
    if N > max_safe_N():
        raise FloatRangeError(
            f"4^{N} exceeds the float range guard (N <= {max_safe_N()}); "
            "use log_spectral_ratio for large N")
    scale = 2.0 / (n + 1)
    terms = []
    for s in range(1, n + 1):
        # 4^N * cos^{2N} computed as (2cos)^{2N}
        r = min(s, n + 1 - s)
        if _is_zero_mode(r, n):
            val = scale if N == 0 else 0.0
        else:
            th = _theta(r, n)
            val = scale * math.sin(th) ** 2 * (2.0 * math.cos(th)) ** (2 * N)
        terms.append(val)
    # largest first; fsum returns the correctly rounded total
    total = math.fsum(sorted(terms, reverse=True))
    return SpectralSum(N=N, n=n, terms=terms, total=total)


def spectral_count(N: int, n: int) -> float:
    """Floating-point |D_{2N,n}| from the eigen-decomposition."""
    return spectral_sum(N, n).total


def logsumexp(values: Iterable[float]) -> float:
    vals = [v for v in values if v != -math.inf]
    if not vals:
        return -math.inf
    top = max(vals)
    return top + math.log(math.fsum(math.exp(v - top) for v in vals))


def log_catalan(N: int) -> float:
    return math.lgamma(2 * N + 1) - math.lgamma(N + 1) - math.lgamma(N + 2)


def log_spectral_count(N: int, n: int) -> float:
    """log |D_{2N,n}| without forming 4^N."""
    if N < 0 or n < 1:
        raise ValueError("need N >= 0 and n >= 1")
    base = math.log(2.0 / (n + 1))
    parts = []
    for s in range(1, n // 2 + 1):
        # s and n + 1 - s contribute equally
        th = _theta(s, n)
        parts.append(math.log(2.0) + base + 2.0 * math.log(math.sin(th))
                     + 2 * N * (math.log(2.0) + _log_cos(th)))
    if n % 2 == 1 and N == 0:
        # the cos = 0 mode only survives at N = 0
        parts.append(base)
    return logsumexp(parts)


def log_spectral_ratio(N: int, n: int) -> float:
    """log(|D_{2N,n}| / C_N) evaluated in log space."""
    return log_spectral_count(N, n) - log_catalan(N)


def subdominant_log_ratio(N: int, n: int) -> float:
    """log( sum_{s=2}^{n-1} G(s) / G(1) ); -inf when the range is empty."""
    if n < 3:
        return -math.inf
    ref = log_g_term(N, n, 1)
    return logsumexp(log_g_term(N, n, s) - ref for s in range(2, n))


def cosine_bound_check(grid: Sequence[float]) -> bool:
    """True iff cos(x) <= exp(-x^2/2) (up to unit roundoff) on every grid point."""
    eps = sys.float_info.epsilon
    ok = True
    for x in grid:
        if not 0.0 <= x <= math.pi / 2:
            raise ValueError(f"grid point {x!r} outside [0, pi/2]")
        if math.cos(x) > math.exp(-0.5 * x * x) * (1.0 + eps) + eps:
            ok = False
    return ok

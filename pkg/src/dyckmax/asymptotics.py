"""Limit law of the scaled maximum of a uniform Dyck path.

Two series describe the distribution function of the Brownian excursion
maximum:

    f(x) = sqrt(2 pi) x^-3 sum_{s>=1} pi^2 s^2 exp(-pi^2 s^2 / (2 x^2))
    K(x) = 1 - 2 sum_{s>=1} (4 x^2 s^2 - 1) exp(-2 x^2 s^2)

They agree for every x > 0 (a Jacobi theta transformation).  The f series
converges fast for small x and the K series for large x.  Each evaluation
carries a certified bound on the truncated tail: once the ratio of
consecutive terms is below 1 and decreasing, the remainder is dominated by a
geometric series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .exact_counts import catalan, count_bounded


class SeriesConvergenceError(RuntimeError):
    """Truncation could not be certified within ``max_terms``."""


@dataclass(frozen=True)
class SeriesSpec:
    abs_tol: float = 1e-15
    max_terms: int = 100_000

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_SPEC = SeriesSpec()
TAIL_PAD = 1.0 + 1e-9


@dataclass(frozen=True)
class LimitEval:
    arg: float
    value: float
    raw: float
    terms_used: int
    tail_bound: float
    series: str


def _certified_sum(log_term: Callable[[int], float],
                   scale: float,
                   spec: SeriesSpec) -> Tuple[float, int, float]:
    """Sum ``exp(log_term(s))`` for s >= 1 until the scaled tail is below tol.

    Terms must be positive with nonincreasing consecutive ratios.  Returns (sum, terms used, tail bound),
    the tail bound already multiplied by ``scale``.
    """
    acc = []
    for s in range(1, spec.max_terms + 1):
        acc.append(math.exp(log_term(s)))
        lt1, lt2 = log_term(s + 1), log_term(s + 2)
        log_ratio = lt2 - lt1
        if log_ratio >= 0.0:
            continue
        # sum_{k>s} t_k <= t_{s+1} / (1 - r), r = t_{s+2}/t_{s+1}
        # padded so float rounding cannot push the true tail past the bound
        tail = TAIL_PAD * scale * math.exp(lt1) / -math.expm1(log_ratio)
        if tail < spec.abs_tol:
            return math.fsum(acc), s, tail
    raise SeriesConvergenceError(
        f"tail not below {spec.abs_tol:g} after {spec.max_terms} terms")


def _check_positive(name: str, v: float):
    if not v > 0 or math.isnan(v):
        raise ValueError(f"{name} must be positive, got {v!r}")


def f_of_t(t: float, spec: SeriesSpec = DEFAULT_SPEC) -> LimitEval:
    """4 sqrt(pi) t^{3/2} sum_s pi^2 s^2 exp(-t pi^2 s^2), the limit of
    P(max < n) along N = [t n^2].  Decreasing in t, from 1 at 0+ to 0."""
    _check_positive("t", t)
    a = t * math.pi ** 2
    scale = 4.0 * math.sqrt(math.pi) * t ** 1.5
    log_scale = math.log(scale) + 2.0 * math.log(math.pi)

    def log_term(s):
        return log_scale + 2.0 * math.log(s) - a * s * s

    # s^2 e^{-a s^2} ratios decrease for every s >= 1
    total, used, tail = _certified_sum(log_term, 1.0, spec)
    return LimitEval(arg=t, value=total, raw=total, terms_used=used,
                     tail_bound=tail, series="f(t)")


def f_of_x(x: float, spec: SeriesSpec = DEFAULT_SPEC) -> LimitEval:
    """sqrt(2 pi) x^-3 sum_s pi^2 s^2 exp(-pi^2 s^2/(2x^2)), the limit of
    P(max <= x sqrt(2N))."""
    _check_positive("x", x)
    a = math.pi ** 2 / (2.0 * x * x)
    log_scale = 0.5 * math.log(2.0 * math.pi) - 3.0 * math.log(x) + 2.0 * math.log(math.pi)

    def log_term(s):
        return log_scale + 2.0 * math.log(s) - a * s * s

    total, used, tail = _certified_sum(log_term, 1.0, spec)
    return LimitEval(arg=x, value=total, raw=total, terms_used=used,
                     tail_bound=tail, series="f(x)")


def k_of_x(x: float, spec: SeriesSpec = DEFAULT_SPEC) -> LimitEval:
    """Kennedy/Chung distribution of the excursion maximum.

    ``raw`` keeps the unclamped series value; ``value`` clips the small
    negative round-off that appears for x well below 1.
    """
    _check_positive("x", x)
    c = 2.0 * x * x
    # 4x^2 s^2 - 1 > 0 from this index on; before it terms are <= 0
    first_positive = math.floor(1.0 / (2.0 * x)) + 1

    terms = []
    for s in range(1, min(first_positive, spec.max_terms + 1)):
        terms.append((2.0 * c * s * s - 1.0) * math.exp(-c * s * s))

    def log_term(s):
        k = s + len(terms)
        return math.log(2.0 * c * k * k - 1.0) - c * k * k

    # ratio (4x^2(s+1)^2-1)/(4x^2 s^2-1) e^{-2x^2(2s+1)} decreases once positive
    head = math.fsum(terms)
    tail_sum, used, tail = _certified_sum(
        log_term, 2.0,
        SeriesSpec(spec.abs_tol, max(1, spec.max_terms - len(terms))))
    raw = 1.0 - 2.0 * (head + tail_sum)
    value = min(max(raw, 0.0), 1.0)
    return LimitEval(arg=x, value=value, raw=raw, terms_used=used + len(terms),
                     tail_bound=tail, series="K(x)")


def limit_cdf(x: float, spec: SeriesSpec = DEFAULT_SPEC) -> LimitEval:
    """Excursion-max CDF using whichever series converges faster at x."""
    return f_of_x(x, spec) if x < 1.0 else k_of_x(x, spec)


def jacobi_sides(x: float, spec: SeriesSpec = DEFAULT_SPEC) -> Tuple[LimitEval, LimitEval]:
    """Both sides of x (1 + 2 sum e^{-2n^2x^2}) = sqrt(pi/2) (1 + 2 sum e^{-pi^2 k^2/(2x^2)})."""
    _check_positive("x", x)
    c = 2.0 * x * x
    d = math.pi ** 2 / (2.0 * x * x)
    left_sum, lu, lt = _certified_sum(lambda s: -c * s * s, 2.0 * x, spec)
    right_scale = math.sqrt(math.pi / 2.0)
    right_sum, ru, rt = _certified_sum(lambda s: -d * s * s, 2.0 * right_scale, spec)
    lhs = x * (1.0 + 2.0 * left_sum)
    rhs = right_scale * (1.0 + 2.0 * right_sum)
    return (LimitEval(x, lhs, lhs, lu, lt, "theta(x)"),
            LimitEval(x, rhs, rhs, ru, rt, "theta(1/x)"))


def jacobi_identity_residual(x: float, spec: SeriesSpec = DEFAULT_SPEC) -> float:
    lhs, rhs = jacobi_sides(x, spec)
    return abs(lhs.value - rhs.value)


def scaled_height_cap(N: int, x: float) -> int:
    """Strict cap n = ceil(x sqrt(2N)) so that P(max < n) approximates f(x)."""
    return max(1, math.ceil(x * math.sqrt(2 * N)))


def exact_scaled_cdf(N: int, x: float, n: Optional[int] = None) -> float:
    """P_N(max < ceil(x sqrt(2N))) from exact counts."""
    if n is None:
        n = scaled_height_cap(N, x)
    return count_bounded(N, n) / catalan(N)

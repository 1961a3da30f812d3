"""Invariant suites behind ``dyckmax verify``.

Each check returns a :class:`Check` with the measured quantity and the
tolerance it was held to, so failures are reported with numbers rather than
a bare flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import asymptotics as asy
from . import deviations as dev
from . import exact_counts as ec
from . import spectral as sp


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def as_row(self) -> dict:
        return {"suite": self.suite, "check": self.name, "passed": self.passed,
                "measured": self.measured, "tolerance": self.tolerance,
                "detail": self.detail}


def oracle_suite() -> List[Check]:
    mismatches = 0
    for N in range(0, 9):
        paths = ec.enumerate_paths(N)
        for n in range(1, N + 3):
            brute = sum(1 for p in paths if p.max_height < n)
            if not brute == ec.count_bounded(N, n) == ec.count_bounded_matrix(N, n):
                mismatches += 1
    out = [Check("oracle", "three_way_counts_N<=8", mismatches == 0, mismatches, 0,
                 "brute force vs DP vs matrix power")]

    bad = 0
    for n in range(1, 102):
        series = ec.count_bounded_series(min(n - 1, 100), n)
        bad += sum(1 for N, c in enumerate(series) if c != ec.catalan(N))
    out.append(Check("oracle", "catalan_corollary_N<=100", bad == 0, bad, 0))

    bad = sum(1 for N in range(1, 61)
              if sum(ec.max_height_pmf(N).values()) != ec.catalan(N))
    out.append(Check("oracle", "pmf_sums_to_catalan_N<=60", bad == 0, bad, 0))
    return out


def spectral_suite() -> List[Check]:
    worst = 0.0
    for n in range(1, 61):
        exact = ec.count_bounded_series(300, n)
        for N in range(1, 301):
            approx = sp.spectral_count(N, n)
            if exact[N] == 0:
                err = abs(approx)
            else:
                err = abs(approx - exact[N]) / exact[N]
            worst = max(worst, err)
    out = [Check("spectral", "spectral_vs_exact_N<=300_n<=60", worst < 1e-9, worst, 1e-9)]

    worst = 0.0
    for n in range(2, 21):
        exact = ec.count_bounded_series(2000, n)
        for N in (1, 10, 100, 500, 1000, 2000):
            ref = math.log(exact[N]) - math.log(ec.catalan(N))
            worst = max(worst, abs(sp.log_spectral_ratio(N, n) - ref))
    out.append(Check("spectral", "log_ratio_vs_exact_N<=2000", worst < 1e-6, worst, 1e-6))

    grid = [k * (math.pi / 2) / 9999 for k in range(10000)]
    out.append(Check("spectral", "cosine_bound_1e4_grid", sp.cosine_bound_check(grid), 0, 0))

    ratios = [sp.subdominant_log_ratio(N, 10) for N in (10 ** 3, 10 ** 4, 10 ** 5)]
    mono = all(a > b for a, b in zip(ratios, ratios[1:]))
    out.append(Check("spectral", "dominant_term_n10", mono, ratios[-1], 0,
                     "log(sum_{s=2}^{n-1} G/G(1)) strictly decreasing"))
    return out


def identity_suite(spec: asy.SeriesSpec = asy.DEFAULT_SPEC) -> List[Check]:
    grid = [k / 10 for k in range(3, 31)]
    diff = max(abs(asy.f_of_x(x, spec).value - asy.k_of_x(x, spec).raw) for x in grid)
    out = [Check("identity", "f_equals_K_0.3..3.0", diff < 1e-12, diff, 1e-12)]
    res = max(asy.jacobi_identity_residual(x, spec) for x in grid + [0.2, 5.0])
    out.append(Check("identity", "jacobi_residual", res < 1e-12, res, 1e-12))

    xs = [0.05 + k * 0.05 for k in range(100)]
    worst = 0.0
    ok = True
    f_vals = [asy.f_of_x(x, spec).value for x in xs]
    k_vals = [asy.k_of_x(x, spec).raw for x in xs]
    for vals in (f_vals, k_vals):
        ok &= all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        ok &= all(-1e-12 <= v <= 1 + 1e-12 for v in vals)
        worst = max(worst, abs(vals[0]), abs(1 - vals[-1]))
    ok &= worst < 1e-9
    out.append(Check("identity", "cdf_axioms_100pt", ok, worst, 1e-9))
    return out


def rates_suite() -> List[Check]:
    out = []
    seq = dev.md_prelimit_sequence(10, [10 ** 3, 10 ** 4, 10 ** 5])
    gaps = [d.gap for d in seq]
    dec = all(a > b for a, b in zip(gaps, gaps[1:]))
    out.append(Check("rates", "md_limit_-pi^2_n10", dec and gaps[-1] < 0.02, gaps[-1], 0.02,
                     "gaps " + ", ".join(f"{g:.4g}" for g in gaps)))
    eq2 = abs(dev.md_asymptotic_log(2000, 10) - sp.log_spectral_ratio(2000, 10))
    out.append(Check("rates", "eq2_two_term_2000_10", eq2 < 0.01, eq2, 0.01))

    fixed = dev.md_fixed_n_limit(10)
    far = abs(dev.md_rate_prelimit(10 ** 9, 10).prelimit - fixed)
    out.append(Check("rates", "md_fixed_n_limit_n10", far < 1e-4, far, 1e-4,
                     "limit 2(n+1)^2 log cos(pi/(n+1))"))

    worst = 0.0
    for x in (0.1, 0.2, 0.25, 0.3, 0.4):
        worst = max(worst, dev.cramer_prelimit(500, x).gap)
    out.append(Check("rates", "cramer_h_N500", worst < 0.02, worst, 0.02))
    half = dev.cramer_prelimit(500, 0.5).gap
    out.append(Check("rates", "cramer_half_N500", half < 0.01, half, 0.01))

    bad = 0
    for N in range(1, 60):
        for m in range(1, N + 1):
            b = dev.gaussian_bounds(N, m)
            bad += not (b["lower_count"] <= b["exact_count"] <= b["upper_count"])
    out.append(Check("rates", "reflection_sandwich_N<60", bad == 0, bad, 0))

    hs = [abs(dev.h_rate(0.5 - e) + math.log(2)) for e in (1e-2, 1e-4, 1e-6)]
    out.append(Check("rates", "h_continuity_at_half", hs[0] > hs[1] > hs[2] and hs[2] < 1e-4,
                     hs[2], 1e-4))
    return out


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "oracle": oracle_suite,
    "spectral": spectral_suite,
    "identity": identity_suite,
    "rates": rates_suite,
}


def run_suite(name: str) -> List[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key]()]
    return SUITES[name]()

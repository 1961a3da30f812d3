"""Exact uniform sampling of Dyck paths.

The sampler walks left to right.  At height h with r steps left it goes up
with probability b(r-1, h+1) / b(r, h), where b(r, h) counts nonnegative
paths of length r from height h down to 0.  The choice is made by comparing
an exact uniform integer draw against b(r-1, h+1), so every path has
probability exactly 1/C_N.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .exact_counts import DyckPath, catalan

Seed = Union[int, random.Random, None]


@dataclass(frozen=True)
class SamplerTable:
    N: int
    completions: Tuple[Tuple[int, ...], ...]

    def b(self, r: int, h: int) -> int:
        if h < 0 or r < 0:
            return 0
        row = self.completions[r]
        return row[h] if h < len(row) else 0


def build_sampler(N: int) -> SamplerTable:
    if N < 1:
        raise ValueError("N must be >= 1")
    rows: List[Tuple[int, ...]] = [(1,)]
    for r in range(1, 2 * N + 1):
        prev = rows[-1]
        get = lambda h: prev[h] if 0 <= h < len(prev) else 0  # noqa: E731
        rows.append(tuple(get(h + 1) + (get(h - 1) if h > 0 else 0)
                          for h in range(r + 1)))
    table = SamplerTable(N=N, completions=tuple(rows))
    if table.b(2 * N, 0) != catalan(N):
        raise AssertionError("completion table does not reproduce C_N")
    return table


def make_rng(seed: Seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def sample_path(table: SamplerTable, seed: Seed = None) -> DyckPath:
    rng = make_rng(seed)
    rows = table.completions
    h = 0
    steps = []
    for r in range(2 * table.N, 0, -1):
        below = rows[r - 1]
        total = rows[r][h]
        if total == 1:
            # forced move: only one completion left
            up = h + 1 < len(below) and below[h + 1] == 1
        else:
            up = rng.randrange(total) < (below[h + 1] if h + 1 < len(below) else 0)
        if up:
            steps.append(1)
            h += 1
        else:
            steps.append(-1)
            h -= 1
    return DyckPath(tuple(steps))


def path_probability(table: SamplerTable, path: DyckPath) -> Fraction:
    """Exact probability that :func:`sample_path` returns ``path``."""
    prob = Fraction(1)
    h = 0
    r = 2 * table.N
    for s in path.steps:
        up = Fraction(table.b(r - 1, h + 1), table.b(r, h))
        prob *= up if s == 1 else 1 - up
        h += s
        r -= 1
    return prob


def sample_bounded(table: SamplerTable, n: int, draws: int,
                   seed: Seed = None) -> Tuple[List[DyckPath], float]:
    """Uniform paths with max < n by rejection; returns (paths, acceptance rate)."""
    if draws < 1:
        raise ValueError("draws must be >= 1")
    if n <= 1:
        raise ValueError("no Dyck path of positive length has max < 1")
    rng = make_rng(seed)
    out = []
    tries = 0
    while len(out) < draws:
        p = sample_path(table, rng)
        tries += 1
        if p.max_height < n:
            out.append(p)
    return out, draws / tries


def empirical_max_counts(table: SamplerTable, draws: int,
                         seed: Seed = None) -> Dict[int, int]:
    if draws < 1:
        raise ValueError("draws must be >= 1")
    rng = make_rng(seed)
    counts = {h: 0 for h in range(1, table.N + 1)}
    for _ in range(draws):
        counts[sample_path(table, rng).max_height] += 1
    return counts


def empirical_max_distribution(table: SamplerTable, draws: int,
                               seed: Seed = None) -> Dict[int, float]:
    """Relative frequency of each maximum height over ``draws`` samples."""
    counts = empirical_max_counts(table, draws, seed)
    return {h: c / draws for h, c in counts.items()}


def ks_distance(freqs: Dict[int, float], pmf: Dict[int, int],
                total: Optional[int] = None) -> float:
    """Sup distance between the empirical CDF and an exact integer pmf."""
    if total is None:
        total = sum(pmf.values())
    emp = exact = 0.0
    acc = 0
    worst = 0.0
    for h in sorted(set(freqs) | set(pmf)):
        emp += freqs.get(h, 0.0)
        acc += pmf.get(h, 0)
        exact = acc / total
        worst = max(worst, abs(emp - exact))
    return worst

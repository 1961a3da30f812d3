"""Exact enumeration of Dyck paths and of their maximum height.

All counts are Python ints, so nothing here ever rounds.  Bounded counts use
the strict convention: ``count_bounded(N, n)`` counts paths of length ``2N``
whose maximum height is ``< n``.  A "max <= h" count is ``count_bounded(N, h + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

ENUMERATION_LIMIT = 10


class SizeLimitError(ValueError):
    """Raised when brute-force enumeration would be too large."""


class ParityError(ValueError):
    """Raised when a lattice endpoint is unreachable because of parity."""


@dataclass(frozen=True)
class DyckPath:
    steps: Tuple[int, ...]

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) % 2:
            raise ValueError("a Dyck path has even length")
        height = 0
        for s in steps:
            if s not in (1, -1):
                raise ValueError(f"steps must be +1 or -1, got {s}")
            height += s
            if height < 0:
                raise ValueError("prefix sum went below zero")
        if height != 0:
            raise ValueError("path does not return to height 0")

    @classmethod
    def from_string(cls, word: str) -> "DyckPath":
        """Build from a word over {U, D}, e.g. ``"UUDD"``."""
        table = {"U": 1, "D": -1}
        return cls(tuple(table[c] for c in word.upper()))

    @property
    def half_length(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> List[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return out

    @property
    def max_height(self) -> int:
        return max(self.heights())

    def __str__(self) -> str:
        return "".join("U" if s == 1 else "D" for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class BoundedCountTable:
    """Prefix counts c(i, h) of nonnegative paths that stay below ``height_cap``.

    Only the last row is kept unless ``rows`` was requested at build time.
    """

    N: int
    height_cap: int
    last_row: List[int]
    rows: Optional[List[List[int]]] = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return self.last_row[0] if self.last_row else 0

    def entry(self, i: int, h: int) -> int:
        if self.rows is None:
            raise ValueError("table was built without retaining rows")
        row = self.rows[i]
        return row[h] if 0 <= h < len(row) else 0


def catalan(N: int) -> int:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return math.comb(2 * N, N) // (N + 1)


def _step(row: List[int], width: int) -> List[int]:
    # row[h] -> row'[h] = row[h-1] + row[h+1], heights 0..width-1
    padded = row + [0] * (width + 1 - len(row))
    new = [padded[1]]
    new.extend(padded[h - 1] + padded[h + 1] for h in range(1, width))
    return new


def bounded_count_table(N: int, n: int, keep_rows: bool = False) -> BoundedCountTable:
    """Run the height-capped recursion over 2N steps.

    The row at step ``i`` is truncated to heights ``<= min(n - 1, i, 2N - i)``;
    higher prefixes cannot return to 0 in time and never contribute.
    With ``keep_rows`` the rows are stored untruncated above that bound.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if n < 1:
        raise ValueError("height cap n must be >= 1")
    total = 2 * N
    row = [1]
    rows = [row] if keep_rows else None
    for i in range(1, total + 1):
        if keep_rows:
            width = min(n, i + 1)
        else:
            width = min(n, i + 1, total - i + 1)
        row = _step(row, width)
        if keep_rows:
            rows.append(row)
    return BoundedCountTable(N=N, height_cap=n, last_row=row, rows=rows)


def count_bounded(N: int, n: int) -> int:
    """|D_{2N,n}|: Dyck paths of length 2N with max height < n."""
    return bounded_count_table(N, n).count


def count_bounded_series(N_max: int, n: int) -> List[int]:
    """``[count_bounded(N, n) for N in 0..N_max]`` from a single pass."""
    if n < 1:
        raise ValueError("height cap n must be >= 1")
    out = [1]
    row = [1]
    for i in range(1, 2 * N_max + 1):
        row = _step(row, min(n, i + 1))
        if i % 2 == 0:
            out.append(row[0])
    return out


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> List[List[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def path_adjacency(n: int) -> List[List[int]]:
    """Adjacency matrix of the path graph on ``n`` vertices (0/1 tridiagonal)."""
    return [[int(abs(i - j) == 1) for j in range(n)] for i in range(n)]


def matrix_power(m: Sequence[Sequence[int]], k: int) -> List[List[int]]:
    result = _identity(len(m))
    base = [list(r) for r in m]
    while k:
        if k & 1:
            result = _matmul(result, base)
        k >>= 1
        if k:
            base = _matmul(base, base)
    return result


def count_bounded_matrix(N: int, n: int) -> int:
    """(T^{2N})_{11} for the n-vertex path-graph adjacency matrix T."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if n < 1:
        raise ValueError("height cap n must be >= 1")
    return matrix_power(path_adjacency(n), 2 * N)[0][0]


def iter_paths(N: int) -> Iterator[DyckPath]:
    steps: List[int] = []

    def rec(height: int, ups: int, downs: int):
        if ups == N and downs == N:
            yield DyckPath(tuple(steps))
            return
        if ups < N:
            steps.append(1)
            yield from rec(height + 1, ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append(-1)
            yield from rec(height - 1, ups, downs + 1)
            steps.pop()

    yield from rec(0, 0, 0)


def enumerate_paths(N: int) -> List[DyckPath]:
    """All Dyck paths of length 2N, lexicographic with U before D."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N > ENUMERATION_LIMIT:
        raise SizeLimitError(
            f"enumeration limited to N <= {ENUMERATION_LIMIT} (got N={N})")
    return list(iter_paths(N))


def max_height_pmf(N: int) -> Dict[int, int]:
    """Number of Dyck paths of length 2N with maximum exactly h, for h = 1..N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    below = [count_bounded(N, h) for h in range(1, N + 2)]
    return {h: below[h] - below[h - 1] for h in range(1, N + 1)}


def _ballot(N: int, m: int) -> int:
    # nonnegative N-step paths from 0 ending at height m
    if (N + m) % 2:
        raise ParityError(
            f"no {N}-step path ends at height {m}: N + m must be even")
    up = (N + m) // 2
    return math.comb(N, up) - math.comb(N, up + 1)


def count_peak_at_midpoint(N: int, m: int) -> int:
    """Dyck paths of length 2N sitting at height ``m`` after N steps.

    Both halves are nonnegative paths between 0 and m, so the count is the
    square of a ballot number.  Every such path has max >= m, which makes
    this a lower bound on the number of paths touching level m.
    """
    if m < 0 or m > N:
        raise ValueError(f"need 0 <= m <= N, got m={m}, N={N}")
    return _ballot(N, m) ** 2


def count_touch_upper_bound(N: int, m: int) -> int:
    """Reflection bound 2 * binom(2N, N + m) on paths reaching level m."""
    if not 1 <= m <= N:
        raise ValueError(f"need 1 <= m <= N, got m={m}, N={N}")
    return 2 * math.comb(2 * N, N + m)


def count_at_least(N: int, m: int) -> int:
    """Dyck paths of length 2N with max height >= m."""
    if m <= 0:
        return catalan(N)
    return catalan(N) - count_bounded(N, m)

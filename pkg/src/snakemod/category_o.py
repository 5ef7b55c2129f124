"""Highest-weight data and Kazhdan-Lusztig coefficient rows for gl_r.

A stable snake at large enough rank determines a pair of gl_r weights: the
upper endpoints sorted weakly decreasing (ties broken by increasing lower
endpoint) give lambda + rho, the matching lower endpoints give mu + rho.
Each nonzero permutation of the snake matrix contributes its sign to the
Verma-module coefficient row indexed by the lower-endpoint vector obtained
by pairing the selected intervals against the sorted upper endpoints.
All vectors are in nu + rho coordinates, so everything stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .determinant import (
    assigned_intervals,
    nonzero_permutations,
    permutation_sign,
    snake_matrix,
)
from .errors import UnsupportedSnakeError
from .snakes import AlternatingSnake


def sorting_permutation(s: AlternatingSnake) -> tuple[int, ...]:
    """Positions reordered so upper endpoints weakly decrease, ties by lower."""
    return tuple(
        sorted(range(1, s.r + 1), key=lambda t: (-s.interval(t).j, s.interval(t).i))
    )


def highest_weight_pair(s: AlternatingSnake) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """(lambda + rho, mu + rho, total length) for the snake's weights."""
    order = sorting_permutation(s)
    lam = tuple(s.interval(t).j for t in order)
    mu = tuple(s.interval(t).i for t in order)
    return lam, mu, sum(a - b for a, b in zip(lam, mu))


def is_dominant_vector(v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


@dataclass(frozen=True)
class KLTable:
    mu_plus_rho: tuple[int, ...]
    lambda_plus_rho: tuple[int, ...]
    rows: tuple[tuple[tuple[int, ...], int], ...]

    def coefficient(self, nu_plus_rho: Sequence[int]) -> int:
        key = tuple(nu_plus_rho)
        for nu, c in self.rows:
            if nu == key:
                return c
        return 0

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.rows)


def kl_table(s: AlternatingSnake) -> KLTable:
    """Verma coefficients of the irreducible with highest weight mu.

    Requires a stable snake whose rank is large enough that every pairing
    [i_p, j_l] is a valid interval; refuses otherwise.
    """
    if not s.is_stable():
        raise UnsupportedSnakeError(f"{s} is not stable; no coefficient formula applies")
    lows = [iv.i for iv in s.intervals]
    highs = [iv.j for iv in s.intervals]
    if max(highs) - min(lows) > s.n + 1 or min(highs) < max(lows):
        raise UnsupportedSnakeError(
            "rank too small: every pairing of a lower and an upper endpoint "
            "must be a valid interval"
        )
    lam, mu, _ = highest_weight_pair(s)
    positions_by_value: dict[int, list[int]] = {}
    for t, v in enumerate(lam):
        positions_by_value.setdefault(v, []).append(t)
    m = snake_matrix(s)
    acc: dict[tuple[int, ...], int] = {}
    for sigma in nonzero_permutations(m):
        by_upper: dict[int, list[int]] = {}
        for iv in assigned_intervals(m, sigma):
            by_upper.setdefault(iv.j, []).append(iv.i)
        nu = [0] * s.r
        for v, slots in positions_by_value.items():
            lowers = sorted(by_upper[v])
            for t, low in zip(slots, lowers):
                nu[t] = low
        acc[tuple(nu)] = acc.get(tuple(nu), 0) + permutation_sign(sigma)
    rows = tuple((nu, c) for nu, c in sorted(acc.items()) if c != 0)
    return KLTable(mu, lam, rows)

"""Snake matrices, their nonzero permutations, and exact determinants.

The matrix attached to a snake has entry (p, l) equal to the fundamental
class at [i_p, j_l] when three conditions hold: the interval is valid, the
span of positions between p and l is connected, and l falls in the break
window of a run containing p (wide window for a descending run, tight for
an ascending one, with out-of-range break indices clamped to 1 and r).  The
determinant of this matrix is the irreducible class of a stable snake,
expanded over standard module classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, UnsupportedSnakeError
from .intervals import Interval, is_connected_pair
from .lweight import LWeight, leq
from .ring import RingElement, fundamental_class, weyl_class
from .snakes import LEFT, RIGHT, AlternatingSnake


@dataclass(frozen=True)
class SnakeMatrix:
    snake: AlternatingSnake
    entries: tuple[tuple[Interval | None, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, p: int, l: int) -> Interval | None:
        """The interval label at 1-based (row, column), or None for a zero."""
        return self.entries[p - 1][l - 1]

    def pattern(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(e is not None for e in row) for row in self.entries)


def _clamped_break(s: AlternatingSnake, t: int) -> int:
    if t < 0:
        return 1
    if t > s.k:
        return s.r
    return s.breaks[t]


def snake_matrix(s: AlternatingSnake) -> SnakeMatrix:
    r = s.r
    pair_ok = [is_connected_pair(s.interval(t), s.interval(t + 1), s.n) for t in range(1, r)]
    broken = [0]
    for ok in pair_ok:
        broken.append(broken[-1] + (0 if ok else 1))

    def span_connected(a: int, b: int) -> bool:
        return broken[b - 1] - broken[a - 1] == 0

    def window(idx: int, along_rows: bool) -> set[int]:
        if s.k == 0:
            return {1}
        allowed: set[int] = set()
        for m in range(1, s.k + 1):
            if not s.breaks[m - 1] <= idx <= s.breaks[m]:
                continue
            d = s.directions[m - 1]
            wide = d == LEFT if along_rows else d == RIGHT
            if wide:
                lo, hi = _clamped_break(s, m - 2), _clamped_break(s, m + 1)
            else:
                lo, hi = s.breaks[m - 1], s.breaks[m]
            allowed.update(range(lo, hi + 1))
        return allowed

    row_windows = [window(p, True) for p in range(1, r + 1)]
    col_windows = [window(l, False) for l in range(1, r + 1)]
    rows: list[tuple[Interval | None, ...]] = []
    for p in range(1, r + 1):
        row: list[Interval | None] = []
        for l in range(1, r + 1):
            iv = Interval(s.interval(p).i, s.interval(l).j)
            keep = (
                iv.is_well_formed(s.n)
                and span_connected(min(p, l), max(p, l))
                and l in row_windows[p - 1]
            )
            by_cols = (
                iv.is_well_formed(s.n)
                and span_connected(min(p, l), max(p, l))
                and p in col_windows[l - 1]
            )
            if keep != by_cols:
                raise InternalCheckError(
                    f"row and column entry rules disagree at ({p}, {l}) for {s}"
                )
            row.append(iv if keep else None)
        rows.append(tuple(row))
    return SnakeMatrix(s, tuple(rows))


def permutation_sign(perm: tuple[int, ...]) -> int:
    inv = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inv % 2 else 1


def nonzero_permutations(m: SnakeMatrix) -> list[tuple[int, ...]]:
    """All assignments with nonzero entry product, per the first-run convention.

    For a descending first run the assignment maps columns to rows (slot l
    holds the row paired with column l); for an ascending first run, rows to
    columns.  1-based, in lexicographic order; the identity always appears.
    """
    r = m.size
    left = m.snake.first_direction() == LEFT
    if left:
        cand = [[p for p in range(1, r + 1) if m.entry(p, l) is not None] for l in range(1, r + 1)]
    else:
        cand = [[l for l in range(1, r + 1) if m.entry(p, l) is not None] for p in range(1, r + 1)]
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []
    used = [False] * (r + 1)

    def extend(slot: int) -> None:
        if slot == r:
            out.append(tuple(chosen))
            return
        for c in cand[slot]:
            if not used[c]:
                used[c] = True
                chosen.append(c)
                extend(slot + 1)
                chosen.pop()
                used[c] = False

    extend(0)
    return out


def assigned_intervals(m: SnakeMatrix, sigma: tuple[int, ...]) -> tuple[Interval, ...]:
    """The entry labels selected by one nonzero assignment."""
    left = m.snake.first_direction() == LEFT
    if left:
        picked = tuple(m.entry(sigma[l], l + 1) for l in range(m.size))
    else:
        picked = tuple(m.entry(p + 1, sigma[p]) for p in range(m.size))
    if any(iv is None for iv in picked):
        raise InternalCheckError("assignment hit a zero entry")
    return picked


def permutation_weight(m: SnakeMatrix, sigma: tuple[int, ...]) -> LWeight:
    return LWeight.from_generators(
        ((iv, 1) for iv in assigned_intervals(m, sigma)), m.snake.n
    )


def det_leibniz(m: SnakeMatrix) -> RingElement:
    """Signed sum over the nonzero assignments; the independent oracle."""
    n = m.snake.n
    total = RingElement.zero(n)
    for sigma in nonzero_permutations(m):
        prod = RingElement.one(n)
        for iv in assigned_intervals(m, sigma):
            prod = prod * fundamental_class(iv, n)
        total = total + (prod if permutation_sign(sigma) > 0 else -prod)
    return total


def det_laplace(
    m: SnakeMatrix,
    rows: tuple[int, ...] | None = None,
    cols: tuple[int, ...] | None = None,
) -> RingElement:
    """Cofactor expansion along the sparsest line, memoized on index pairs."""
    n = m.snake.n
    all_idx = tuple(range(1, m.size + 1))
    rows = all_idx if rows is None else tuple(rows)
    cols = all_idx if cols is None else tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], RingElement] = {}

    def det(rs: tuple[int, ...], cs: tuple[int, ...]) -> RingElement:
        if not rs:
            return RingElement.one(n)
        key = (rs, cs)
        hit = memo.get(key)
        if hit is not None:
            return hit
        row_counts = [sum(m.entry(p, l) is not None for l in cs) for p in rs]
        col_counts = [sum(m.entry(p, l) is not None for p in rs) for l in cs]
        br, bc = min(range(len(rs)), key=row_counts.__getitem__), min(
            range(len(cs)), key=col_counts.__getitem__
        )
        total = RingElement.zero(n)
        if row_counts[br] <= col_counts[bc]:
            p = rs[br]
            sub_rows = rs[:br] + rs[br + 1 :]
            for ci, l in enumerate(cs):
                iv = m.entry(p, l)
                if iv is None:
                    continue
                cof = fundamental_class(iv, n) * det(sub_rows, cs[:ci] + cs[ci + 1 :])
                total = total + (cof if (br + ci) % 2 == 0 else -cof)
        else:
            l = cs[bc]
            sub_cols = cs[:bc] + cs[bc + 1 :]
            for ri, p in enumerate(rs):
                iv = m.entry(p, l)
                if iv is None:
                    continue
                cof = fundamental_class(iv, n) * det(rs[:ri] + rs[ri + 1 :], sub_cols)
                total = total + (cof if (ri + bc) % 2 == 0 else -cof)
        memo[key] = total
        return total

    return det(rows, cols)


@dataclass(frozen=True)
class StandardExpansion:
    """Signed multiplicities of standard classes in an irreducible class."""

    snake: AlternatingSnake
    terms: tuple[tuple[LWeight, int], ...]
    sigma_count: int

    def coefficient(self, w: LWeight) -> int:
        for weight, c in self.terms:
            if weight == w:
                return c
        return 0

    def as_ring_element(self) -> RingElement:
        total = RingElement.zero(self.snake.n)
        for w, c in self.terms:
            term = weyl_class(w)
            for _ in range(abs(c)):
                total = total + (term if c > 0 else -term)
        return total


def standard_expansion(s: AlternatingSnake) -> StandardExpansion:
    """Expand the class of a stable snake over standard module labels."""
    if not s.is_stable():
        raise UnsupportedSnakeError(f"{s} is not stable; the expansion is not defined")
    m = snake_matrix(s)
    sigmas = nonzero_permutations(m)
    acc: dict[LWeight, int] = {}
    for sigma in sigmas:
        w = permutation_weight(m, sigma)
        acc[w] = acc.get(w, 0) + permutation_sign(sigma)
    terms = tuple(
        (w, c) for w, c in sorted(acc.items(), key=lambda t: t[0].sort_key()) if c != 0
    )
    return StandardExpansion(s, terms, len(sigmas))


def derived_snake(s: AlternatingSnake, p: int) -> AlternatingSnake:
    """The size r-1 snake matching the minor at row p (column p when ascending)."""
    if s.r == 1:
        raise ValueError("a single-interval snake has no derived snake")
    if not (s.is_prime() and s.is_stable()):
        raise UnsupportedSnakeError("derived snakes are defined for prime stable snakes")
    r1 = s.breaks[1]
    if not 1 <= p <= r1:
        raise IndexError(f"p = {p} out of range 1..{r1}")
    if s.first_direction() == LEFT:
        head = [Interval(s.interval(t).i, s.interval(t + 1).j) for t in range(1, p)]
    else:
        head = [Interval(s.interval(t + 1).i, s.interval(t).j) for t in range(1, p)]
    ivs = (*head, *s.intervals[p:])
    if len(ivs) == 1:
        breaks: tuple[int, ...] = (1,)
    elif r1 == 2:
        breaks = (1, *(b - 1 for b in s.breaks[2:]))
    else:
        breaks = (1, *(b - 1 for b in s.breaks[1:]))
    return AlternatingSnake.build(ivs, breaks, s.n)


def minor_identity_holds(s: AlternatingSnake, p: int) -> bool:
    """Minor at p of the snake matrix vs the derived snake's full matrix.

    Determinants must agree always; when the derived snake is connected the
    two matrices must also agree cell by cell.
    """
    if s.r == 1:
        if p != 1:
            raise IndexError("p = 1 is the only minor of a 1 x 1 matrix")
        return True
    if not (s.is_prime() and s.is_stable()):
        raise UnsupportedSnakeError("the minor identity is stated for prime stable snakes")
    m = snake_matrix(s)
    all_idx = tuple(range(1, s.r + 1))
    if s.first_direction() == LEFT:
        rows = tuple(x for x in all_idx if x != p)
        cols = all_idx[1:]
    else:
        rows = all_idx[1:]
        cols = tuple(x for x in all_idx if x != p)
    sp = derived_snake(s, p)
    mp = snake_matrix(sp)
    if det_laplace(m, rows, cols) != det_laplace(mp):
        return False
    if sp.is_connected():
        sub = tuple(tuple(m.entry(rp, cl) for cl in cols) for rp in rows)
        if sub != mp.entries:
            return False
    return True


def split_identity_holds(s: AlternatingSnake) -> bool:
    """det A(s) = det A(first factor span) * det A(rest) at the first cut."""
    if not s.is_stable():
        raise UnsupportedSnakeError("the split identity is stated for stable snakes")
    cuts = s.cut_positions()
    if not cuts:
        raise ValueError("snake is prime; nothing to split")
    l = cuts[0]
    whole = det_laplace(snake_matrix(s))
    left = det_laplace(snake_matrix(s.segment(0, l)))
    right = det_laplace(snake_matrix(s.segment(l, s.r)))
    return whole == left * right


def expansion_dominated(e: StandardExpansion) -> bool:
    """Every label of the expansion sits below the snake's weight."""
    top = e.snake.weight()
    return all(leq(w, top) for w, _ in e.terms)

"""Witness constructors: naive, evenly spread, and minimax-balanced.

``naive_construct`` realizes any nonnegative vector along a single cycle.
``pigeonhole_construct`` spreads each row as evenly as possible, attaining
the smallest possible largest entry.  ``mini_max`` builds a realization
whose pair totals all lie in [g, f], the provably best window: it settles
players from the highest index down, and for each player k runs a slicing
step that balances the k-th row and column against the remaining prefix.

The slicing step starts from the extreme where player k wins all f points
of each of their matches, then sheds the surplus ("missing" points) in two
phases: first by handing points to lower players who still hold slack
above the mandatory minimum ("additional" points), always to the current
top block of equal provisional scores so the prefix stays nondecreasing;
then, when no slack is reachable, by plain forfeits that lower pair totals
toward g.  Indices inside this module are 1-based to keep the prefix
sentinel p[0] = 0 natural; the public matrices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .analysis import extremal_summary
from .core import (
    ExtremalSummary,
    InfeasiblePrefix,
    IntervalParams,
    PointMatrix,
    ScoreSequence,
    ceil_div,
    normalize_sequence,
)


def naive_construct(raw: Sequence[int]) -> PointMatrix:
    """One-cycle realization: player i hands d_i to the next player.

    Accepts any order; sorting is not required.  Row sums equal the input
    and no entry exceeds the largest input score.
    """
    normalize_sequence(raw)  # reuse the length/negativity validation
    n = len(raw)
    grid = [[0] * n for _ in range(n)]
    grid[n - 1][0] = raw[n - 1]
    for i in range(n - 1):
        grid[i][i + 1] = raw[i]
    return PointMatrix.from_rows(grid)


def pigeonhole_construct(D: ScoreSequence) -> PointMatrix:
    """Evenly spread realization: row i splits d_i into near-equal parts.

    Each row hands ceil(d_i/(n-1)) to its first d_i mod (n-1) cyclic
    opponents and floor(d_i/(n-1)) to the rest, so no entry exceeds
    h = ceil(d_n/(n-1)) and no pair total exceeds 2h.
    """
    n = D.n
    grid = [[0] * n for _ in range(n)]
    for i, d in enumerate(D.scores):
        larger = d % (n - 1)
        high = ceil_div(d, n - 1)
        low = d // (n - 1)
        for j in range(1, n):
            opponent = (i + j) % n
            grid[i][opponent] = high if j <= larger else low
    return PointMatrix.from_rows(grid)


@dataclass
class SlicingState:
    """Mutable progress of the minimax reconstruction.

    k: players still unsettled (matches among 1..k remain open).
    p: provisional scores p[1..k] with sentinel p[0] = 0, nondecreasing.
    grid: 1-based (n+1) x (n+1) working matrix; row 0 / column 0 unused.
    missing: points player k must still shed to land on p[k].
    additional: slack A[i] = P_i - a * B_i of the first i players, where
        P_i is the prefix sum of p.
    """

    k: int
    p: list[int]
    grid: list[list[int]]
    missing: int = 0
    additional: list[int] | None = None


def _rebuild_additional(p: list[int], k: int, a: int) -> tuple[list[int], list[int]]:
    """Slack A[i] = P_i - a*B_i over p[1..k-1], plus suffix minima of A.

    A hand-out to player i lowers every prefix sum from i on, so the room
    left for player i is min(A[i], A[i+1], ..., A[k-1]), not A[i] alone.
    """
    A = [0] * k
    prefix = 0
    pairs = 0
    for i in range(1, k):
        prefix += p[i]
        pairs += i - 1
        A[i] = prefix - a * pairs
    suffix_min = list(A)
    for i in range(k - 2, 0, -1):
        if suffix_min[i + 1] < suffix_min[i]:
            suffix_min[i] = suffix_min[i + 1]
    return A, suffix_min


def _restore_order(p: list[int], grid: list[list[int]], k: int) -> None:
    """Re-sort players 1..k-1 by provisional score, carrying settled matches.

    Matches among players 1..k-1 are still untouched placeholders, so two of
    them may swap identities freely as long as their already-settled columns
    (everything from k on, including the column being built) swap too.
    """
    if all(p[i] <= p[i + 1] for i in range(1, k - 1)):
        return
    n = len(grid) - 1
    order = sorted(range(1, k), key=lambda i: p[i])
    old_p = p[1:k]
    old_rows = [grid[i][k:] for i in range(1, k)]
    old_cols = [[grid[t][i] for t in range(k, n + 1)] for i in range(1, k)]
    for pos, src in enumerate(order, start=1):
        p[pos] = old_p[src - 1]
        grid[pos][k:] = old_rows[src - 1]
        for off, t in enumerate(range(k, n + 1)):
            grid[t][pos] = old_cols[src - 1][off]


def score_slicing(state: SlicingState, params: IntervalParams) -> SlicingState:
    """Settle all matches of player k against players 1..k-1.

    Expects row k primed at b and column k at 0 for the open matches, and a
    nondecreasing prefix p[1..k] that is realizable within [a, b].  On
    return, player k's matches sum to p[k] with every pair total in [a, b],
    and the returned state holds the reduced nondecreasing prefix p[1..k-1]
    (p_i minus the points handed to player i); when hand-outs had to skip a
    locked player, lower players are relabeled to keep the prefix sorted.

    Raises InfeasiblePrefix if the surplus cannot be shed, which indicates
    the caller skipped the realizability test.
    """
    k = state.k
    p = state.p
    grid = state.grid
    a, b = params.a, params.b
    if k < 3:
        raise ValueError(f"slicing needs at least 3 unsettled players, got {k}")

    missing = (k - 1) * b - p[k]
    if missing < 0:
        raise InfeasiblePrefix(f"score p[{k}]={p[k]} exceeds ({k - 1})*b={b * (k - 1)}")
    A, room_after = _rebuild_additional(p, k, a)

    # Every pair total must end up at least a, so forfeits alone can shed at
    # most (k-1)*(b-a) points and this many must leave via hand-outs that
    # take a player's winnings against k from below a toward a.  Hand-outs
    # beyond a per player are allowed only once this quota is met, otherwise
    # they starve the forfeit phase.
    deficit = max(0, (k - 1) * a - p[k])

    # Phase 1: hand surplus to players that still hold slack, top block first,
    # keeping the receiving pair totals pinned at b.
    while missing > 0 and A[k - 1] > 0:
        x = k - 1
        while x >= 1 and (
            grid[x][k] == b or (deficit > 0 and grid[x][k] >= a)
        ):
            x -= 1
        if x == 0:
            break
        low = x
        while low - 1 >= 1 and p[low - 1] == p[x]:
            low -= 1
        freq = x - low + 1
        gap = p[x] - p[low - 1]
        per_member = min(
            b, gap, ceil_div(room_after[x], freq), ceil_div(missing, freq)
        )
        if per_member <= 0:
            break
        handed = 0
        for idx in range(low, x + 1):
            if missing == 0:
                break
            y = min(
                b - grid[idx][k],
                per_member,
                missing,
                room_after[idx] - handed,
                p[idx],
            )
            room = a - grid[idx][k]
            if deficit > 0:
                y = min(y, max(0, room))
            if y <= 0:
                continue
            if room > 0:
                deficit = max(0, deficit - min(y, room))
            grid[idx][k] += y
            grid[k][idx] -= y
            p[idx] -= y
            missing -= y
            handed += y
        if handed == 0:
            break
        _restore_order(p, grid, k)
        A, room_after = _rebuild_additional(p, k, a)

    # Phase 2: plain forfeits, lowering pair totals toward a.
    while missing > 0:
        shed_any = False
        for i in range(k - 1, 0, -1):
            if missing == 0:
                break
            y = min(grid[k][i], missing, grid[k][i] + grid[i][k] - a)
            if y > 0:
                grid[k][i] -= y
                missing -= y
                shed_any = True
        if not shed_any:
            raise InfeasiblePrefix(
                f"player {k} still holds {missing} surplus points with every "
                f"pair total already at the floor {a}"
            )

    _restore_order(p, grid, k)
    return SlicingState(k=k - 1, p=p[:k], grid=grid, missing=0, additional=A)


def mini_max(D: ScoreSequence) -> tuple[ExtremalSummary, PointMatrix]:
    """Build a realization of D whose pair totals all lie in [g, f].

    Because f is the smallest achievable maximum pair total and g the
    largest achievable minimum, the result attains both extremes exactly:
    its matrix stats give F = f and G = g.
    """
    summary = extremal_summary(D)
    a, b = summary.g, summary.f
    n = D.n

    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, i):
            grid[i][j] = b
    p = [0, *D.scores]

    state = SlicingState(k=n, p=p, grid=grid)
    params = IntervalParams(a, b)
    while state.k >= 3:
        state = score_slicing(state, params)

    grid[1][2] = state.p[1]
    grid[2][1] = state.p[2]

    rows = [row[1:] for row in grid[1:]]
    sums = [sum(row) for row in rows]
    if any(x > y for x, y in zip(sums, sums[1:])):
        # mid-build relabeling permuted the players; sort them back so that
        # row i sums to the i-th score
        order = sorted(range(n), key=lambda i: sums[i])
        rows = [[rows[oi][oj] for oj in order] for oi in order]
    return summary, PointMatrix.from_rows(rows)

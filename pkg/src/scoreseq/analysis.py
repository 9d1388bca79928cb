"""Realizability testing and the extremal parameters e, f, g.

A nondecreasing sequence D is the score sequence of some tournament whose
pair totals all lie in [a, b] if and only if, for every k in 1..n,

    a * B_k  <=  S_k  <=  b * B_n - L_k - (n - k) * d_k,

where B_k = k(k-1)/2, S_k is the sum of the k smallest scores, and the loss
table L_k = max(L_{k-1}, b * B_k - S_k) starting from L_0 = 0 accumulates
the points the top n-k players are forced to concede to the bottom k.

The two sides of the test are independent: the left inequalities involve
only ``a`` and the right ones only ``b``.  That makes the largest feasible
``a`` (called g) a closed-form minimum of floored prefix averages, and the
smallest feasible ``b`` (called f) the target of a monotone binary search.
The smallest achievable single entry e is the pigeonhole bound of the top
score.  All arithmetic is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ExtremalSummary,
    IntervalParams,
    PrefixTables,
    ScoreSequence,
    ceil_div,
    prefix_tables,
)


@dataclass(frozen=True)
class LossTable:
    """Loss-function values L_0..L_n for a fixed pair-total upper bound b."""

    b: int
    L: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.L[0] != 0:
            raise ValueError("loss table must start at 0")
        if any(x > y for x, y in zip(self.L, self.L[1:])):
            raise ValueError("loss table must be nondecreasing")


def loss_table(D: ScoreSequence, b: int, tables: PrefixTables) -> LossTable:
    """Points the top players must concede: running max of b*B_k - S_k, floored at 0.

    Equivalently L_k = max over 0 <= j <= k of max(0, b*B_j - S_j).
    """
    if b < 0:
        raise ValueError(f"upper bound b={b} must be nonnegative")
    B, S = tables.B, tables.S
    L = [0]
    for k in range(1, D.n + 1):
        L.append(max(L[-1], b * B[k] - S[k]))
    return LossTable(b=b, L=tuple(L))


def interval_test(D: ScoreSequence, params: IntervalParams) -> bool:
    """Decide whether D is realizable with every pair total in [a, b].

    Runs in one pass over the scores, O(n) time and O(1) extra space.
    """
    a, b = params.a, params.b
    scores = D.scores
    n = len(scores)
    b_total = b * (n * (n - 1) // 2)
    B = 0
    S = 0
    L = 0
    for k, d in enumerate(scores, start=1):
        B += k - 1
        S += d
        if a * B > S:
            return False
        bonus = b * B - S
        if bonus > L:
            L = bonus
        if S > b_total - L - (n - k) * d:
            return False
    return True


def bound_e(D: ScoreSequence) -> int:
    """Smallest achievable largest single entry: ceil(d_n / (n - 1)).

    The top player's d_n points spread over n-1 opponents force at least
    this much somewhere, and distributing every row as evenly as possible
    attains it.
    """
    return ceil_div(D.scores[-1], D.n - 1)


def f_search_interval(D: ScoreSequence, tables: PrefixTables) -> tuple[int, int]:
    """Window [lo, hi] guaranteed to contain f.

    lo = max(ceil(S_n / B_n), ceil(d_n / (n - 1))): the global average pair
    total and the top row's pigeonhole bound.  hi = 2 * ceil(d_n / (n - 1)):
    attained by the evenly-spread construction.
    """
    h = bound_e(D)
    lo = max(ceil_div(tables.S[-1], tables.B[-1]), h)
    return lo, 2 * h


def min_f(D: ScoreSequence) -> int:
    """Smallest b such that D is realizable with all pair totals <= b.

    Binary search over the guaranteed window; feasibility in b is monotone
    because raising b only relaxes the right-hand inequalities.
    O(n log(d_n / n)) time.
    """
    lo, hi = f_search_interval(D, prefix_tables(D))
    if interval_test(D, IntervalParams(0, lo)):
        return lo
    # invariant: lo infeasible, hi feasible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if interval_test(D, IntervalParams(0, mid)):
            hi = mid
        else:
            lo = mid
    return hi


def min_f_closed_form(D: ScoreSequence) -> int:
    """Direct O(n^2) evaluation of f, used to cross-check the binary search.

    Unfolding the loss table turns the right-hand inequalities into one
    constraint per index pair j <= k:

        S_k + (n - k) * d_k - S_j  <=  b * (B_n - B_j),

    so f is the largest of the ceiled quotients over 0 <= j < n, j <= k <= n.
    """
    tables = prefix_tables(D)
    B, S = tables.B, tables.S
    n = D.n
    scores = D.scores
    best = 0
    for j in range(n):
        den = B[n] - B[j]
        for k in range(max(j, 1), n + 1):
            num = S[k] + (n - k) * scores[k - 1] - S[j]
            q = ceil_div(num, den)
            if q > best:
                best = q
    return best


def max_g(D: ScoreSequence, f: int) -> int:
    """Largest a such that D is realizable with all pair totals in [a, f].

    The a-side of the test decouples from b, so the answer is the closed
    form min over 2 <= k <= n of floor(S_k / B_k); it never exceeds f.
    O(n) time.
    """
    tables = prefix_tables(D)
    B, S = tables.B, tables.S
    return min(S[k] // B[k] for k in range(2, D.n + 1))


def max_g_by_search(D: ScoreSequence, f: int) -> int:
    """Binary-search evaluation of g, used to cross-check the closed form."""
    if interval_test(D, IntervalParams(f, f)):
        return f
    # invariant: lo feasible, hi infeasible
    lo, hi = 0, f
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if interval_test(D, IntervalParams(mid, f)):
            lo = mid
        else:
            hi = mid
    return lo


def extremal_summary(D: ScoreSequence) -> ExtremalSummary:
    """Compute e, f, g together with the window the f-search used."""
    lo, hi = f_search_interval(D, prefix_tables(D))
    f = min_f(D)
    return ExtremalSummary(
        e=bound_e(D),
        f=f,
        g=max_g(D, f),
        f_search_lo=lo,
        f_search_hi=hi,
    )

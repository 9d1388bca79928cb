"""Hand-checked six-player reference tables used across the test suite.

All three tables realize the same score sequence.  The first is a given
tournament whose pair totals span [2, 10]; the second is an unbalanced
reconstruction with the same span; the third is the minimax-balanced
reconstruction whose pair totals all lie in [8, 9].
"""

SCORES_SIX = (9, 9, 19, 20, 32, 34)

TABLE_WIDE = (
    (0, 1, 5, 1, 1, 1),
    (1, 0, 4, 2, 0, 2),
    (3, 3, 0, 5, 4, 4),
    (8, 2, 5, 0, 2, 3),
    (9, 9, 5, 7, 0, 2),
    (8, 7, 5, 6, 8, 0),
)

TABLE_UNBALANCED = (
    (0, 1, 1, 6, 1, 0),
    (1, 0, 1, 6, 1, 0),
    (1, 1, 0, 6, 8, 3),
    (3, 3, 3, 0, 8, 3),
    (9, 9, 2, 2, 0, 10),
    (10, 10, 7, 7, 0, 0),
)

TABLE_BALANCED = (
    (0, 4, 4, 1, 0, 0),
    (4, 0, 4, 1, 0, 0),
    (4, 4, 0, 7, 4, 0),
    (7, 7, 1, 0, 5, 0),
    (8, 8, 4, 3, 0, 9),
    (9, 9, 8, 8, 0, 0),
)

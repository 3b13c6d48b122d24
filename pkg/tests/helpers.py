"""Shared test oracles and golden data.

Everything here is deliberately independent of the library's fast paths:
subset filters, componentwise-domination closures, and hand-transcribed
golden values.
"""

from itertools import combinations

from tspread import Context, borel_closure_degree, spread_monomials

# Maximal corner counts for 2-spread ideals, rows = initial degree,
# columns n = 4..20; None is a dash (no qualifying ideal).
TABLE_T2 = {
    2: [1, 1, 2, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8],
    3: [None, None, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8],
    4: [None, None, None, None, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7],
    5: [None] * 6 + [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6],
    6: [None] * 8 + [1, 1, 2, 2, 3, 3, 4, 4, 5],
    7: [None] * 10 + [1, 1, 2, 2, 3, 3, 4],
    8: [None] * 12 + [1, 1, 2, 2, 3],
    9: [None] * 14 + [1, 1, 2],
    10: [None] * 16 + [1],
}

# Same for 3-spread ideals, rows = initial degree, columns n = 4..20.
TABLE_T3 = {
    2: [1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5],
    3: [None] * 4 + [1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5],
    4: [None] * 7 + [1, 1, 1, 2, 2, 2, 3, 3, 3, 4],
    5: [None] * 10 + [1, 1, 1, 2, 2, 2, 3],
    6: [None] * 13 + [1, 1, 1, 2],
    7: [None] * 16 + [1],
}

TABLE_N_RANGE = (4, 20)

# Betti diagram of B_3(x1x14, x2x5x14, x2x6x9x14): rows by generator degree.
GOLDEN_BETTI_ROWS = {
    2: [11, 55, 165, 330, 462, 462, 330, 165, 55, 11, 1],
    3: [7, 28, 56, 70, 56, 28, 8, 1],
    4: [3, 9, 10, 5, 1],
}
GOLDEN_CORNERS = ((10, 2), (7, 3), (4, 4))
GOLDEN_CORNER_VALUES = (1, 1, 1)

# Witness monomials for 46 variables at spread 3: starter, ten forward
# monomials, the critic (index 11), two backward monomials.
OMEGAS_46_3 = [
    (1, 46),
    (2, 5, 46),
    (2, 6, 9, 46),
    (2, 6, 10, 13, 46),
    (2, 6, 10, 14, 17, 46),
    (2, 6, 10, 14, 18, 21, 46),
    (2, 6, 10, 14, 18, 22, 25, 46),
    (2, 6, 10, 14, 18, 22, 26, 29, 46),
    (2, 6, 10, 14, 18, 22, 26, 30, 33, 46),
    (2, 6, 10, 14, 18, 22, 26, 30, 34, 37, 46),
    (2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 41, 46),
    (2, 6, 10, 14, 18, 22, 26, 31, 34, 37, 40, 43, 46),
    (2, 6, 10, 14, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46),
    (2, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46),
]


def brute_force_spread(n, d, t):
    """All t-spread degree-d monomials by filtering raw d-subsets of {1..n}."""
    return [u for u in combinations(range(1, n + 1), d)
            if all(b - a >= t for a, b in zip(u, u[1:]))]


def domination_closure(u, ctx):
    """Members of M_{n,deg,t} dominated componentwise by u (closure oracle)."""
    return [v for v in spread_monomials(ctx, len(u))
            if all(a <= b for a, b in zip(v, u))]


def closure_equivalence_cases(max_n=12, max_t=3, max_d=4):
    """Compare BFS closures against the domination oracle; returns
    (cases, mismatches)."""
    cases = mismatches = 0
    for t in range(1, max_t + 1):
        for n in range(2, max_n + 1):
            ctx = Context(n, t)
            for d in range(1, max_d + 1):
                for u in spread_monomials(ctx, d):
                    cases += 1
                    if borel_closure_degree(u, ctx) != domination_closure(u, ctx):
                        mismatches += 1
    return cases, mismatches


def mult_binom(a, b):
    """Multiplicative big-integer binomial, independent of math.comb."""
    if b < 0 or b > a:
        return 0
    result = 1
    for i in range(1, b + 1):
        result = result * (a - b + i) // i
    return result


def table_cells(table, t):
    """Yield (n, t, ell1, value) over a golden table."""
    lo, hi = TABLE_N_RANGE
    for ell1, row in table.items():
        for n, value in zip(range(lo, hi + 1), row):
            yield n, t, ell1, value

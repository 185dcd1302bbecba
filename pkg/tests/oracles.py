"""Independent brute-force routes used as ground truth by the tests.

Nothing here imports the code under test beyond the plain data types.
"""

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache


def partition_count(d):
    """p(d) by the standard "largest part at most k" recursion."""

    @lru_cache(maxsize=None)
    def q(m, k):
        if m == 0:
            return 1
        if m < 0 or k == 0:
            return 0
        return q(m - k, k) + q(m, k - 1)

    return q(d, d)


def cycle_parts(g):
    seen, out = set(), []
    for s in range(len(g)):
        if s in seen:
            continue
        n, i = 0, s
        while i not in seen:
            seen.add(i)
            i = g[i]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def compose(g, h):
    return tuple(g[h[i]] for i in range(len(h)))


def class_counts(d):
    return Counter(cycle_parts(g) for g in itertools.permutations(range(d)))


def class_sum(d, parts):
    """K_sigma as a dict permutation -> 1 in the full group algebra."""
    return {g: Fraction(1) for g in itertools.permutations(range(d)) if cycle_parts(g) == tuple(parts)}


def group_multiply(a, b):
    out = {}
    for g, x in a.items():
        for h, y in b.items():
            k = compose(g, h)
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def count_tuples_bruteforce(d, profile_parts):
    """Enumerate every tuple, including the last entry, and test the product."""
    perms = list(itertools.permutations(range(d)))
    classes = [[g for g in perms if cycle_parts(g) == tuple(p)] for p in profile_parts]
    identity = tuple(range(d))
    total = 0
    for tup in itertools.product(*classes):
        acc = identity
        for g in tup:
            acc = compose(acc, g)
        total += acc == identity
    return total


def double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def compatible_split_systems(n):
    """All sets of pairwise-compatible nontrivial splits of {1..n}.

    Splits are frozensets not containing leaf 1; by the splits-equivalence
    theorem these sets are exactly the stable trees with n labeled leaves.
    """
    universe = frozenset(range(1, n + 1))
    splits = []
    for k in range(2, n - 1):
        for side in itertools.combinations(range(2, n + 1), k):
            splits.append(frozenset(side))

    def compatible(a, b):
        return not (a & b) or a <= b or b <= a or not ((universe - a) & (universe - b))

    systems = [frozenset()]
    frontier = [(frozenset(), 0)]
    while frontier:
        nxt = []
        for system, start in frontier:
            for i in range(start, len(splits)):
                s = splits[i]
                if all(compatible(s, t) for t in system):
                    grown = system | {s}
                    systems.append(grown)
                    nxt.append((grown, i + 1))
        frontier = nxt
    return systems

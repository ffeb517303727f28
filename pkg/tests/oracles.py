"""Independent reference computations for the test suite.

Nothing here imports the search engine: maps are built by plain backtracking
in index order, checking every fully-assigned triple (x, y, xy) by table
lookups only.
"""

import itertools


def naive_morphisms(table, half=True):
    n = len(table)
    img = [-1] * n
    out = []

    def allowed(x, y):
        a, b, p = img[x], img[y], img[table[x][y]]
        if a < 0 or b < 0 or p < 0:
            return True
        if half:
            return p == table[a][b] or p == table[b][a]
        return p == table[a][b]

    def consistent(k):
        for x in range(n):
            if img[x] < 0:
                continue
            if not (allowed(k, x) and allowed(x, k)):
                return False
            for y in range(n):
                if table[x][y] == k and not allowed(x, y):
                    return False
        return True

    def rec(k, used):
        if k == n:
            out.append(tuple(img))
            return
        for y in range(n):
            if y in used:
                continue
            img[k] = y
            if consistent(k):
                rec(k + 1, used | {y})
            img[k] = -1

    rec(0, frozenset())
    return sorted(out)


def brute_permutations(table, predicate):
    """All bijections f with f(0) = 0 satisfying predicate(f)."""
    n = len(table)
    return [
        (0, *p) for p in itertools.permutations(range(1, n)) if predicate((0, *p))
    ]


def is_hom(table, f):
    n = len(table)
    return all(f[table[x][y]] == table[f[x]][f[y]] for x in range(n) for y in range(n))


def commuting_center(table):
    n = len(table)
    return [z for z in range(n) if all(table[z][g] == table[g][z] for g in range(n))]


def element_order(table, x):
    k, p = 1, x
    while p != 0:
        p = table[x][p]
        k += 1
    return k

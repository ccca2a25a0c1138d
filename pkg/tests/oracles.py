"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def brute_axioms_ok(rt):
    n = len(rt)
    if any(rt[x][x] != x for x in range(n)):
        return False
    for y in range(n):
        if sorted(rt[x][y] for x in range(n)) != list(range(n)):
            return False
    return all(rt[rt[x][y]][z] == rt[rt[x][z]][rt[y][z]]
               for x in range(n) for y in range(n) for z in range(n))


def brute_hom_count(src_rt, tgt_rt):
    """Check every set map."""
    n, m = len(src_rt), len(tgt_rt)
    count = 0
    for f in product(range(m), repeat=n):
        if all(f[src_rt[x][y]] == tgt_rt[f[x]][f[y]] for x in range(n) for y in range(n)):
            count += 1
    return count


def perm_compose(p, q):
    """Apply p then q."""
    return tuple(q[i] for i in p)


def perm_inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def bareiss_rank(rows):
    """Rank over Q by fraction-free Gaussian elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(rank + 1, m):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * a[rank][col] - a[rank][c] * a[r][col]) // prev
            a[r][col] = 0
        prev = a[rank][col]
        rank += 1
        if rank == m:
            break
    return rank


def det(rows):
    """Exact determinant with fractions."""
    a = [[Fraction(v) for v in r] for r in rows]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(result)


def invariant_factors_by_minors(rows):
    """Invariant factors from determinantal divisors: d_k = g_k / g_{k-1}."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def conjugate_word(gen, word):
    """Reduced free-group word for ``word^-1 gen word``."""
    inv = [(g, -e) for g, e in reversed(word)]
    return free_reduce(inv + [(gen, 1)] + list(word))


def same_free_quandle_element(s, w, t, v):
    """``s^w == t^v`` iff s == t and ``v w^-1`` is a power of s."""
    if s != t:
        return False
    inv_w = [(g, -e) for g, e in reversed(w)]
    red = free_reduce(list(v) + inv_w)
    return all(g == s for g, _ in red) and len({e for _, e in red}) <= 1

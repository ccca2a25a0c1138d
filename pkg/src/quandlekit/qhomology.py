"""Rack and quandle homology of finite quandles over the integers.

Chains in degree ``n`` are integer combinations of ``n``-tuples.  The
boundary is

    ∂(x_1..x_n) = Σ_{i=2..n} (-1)^i [ (x_1..x̂_i..x_n)
                                      - (x_1▷x_i, .., x_{i-1}▷x_i, x_{i+1}, .., x_n) ]

with ``∂_1 = 0``.  The quandle complex drops tuples with ``x_i = x_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np
from scipy import sparse

from .errors import InputError, ResourceError
from .finite import FiniteQuandle

DEGREE_CAP = 4
TUPLE_CAP = 100_000


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank ⊕ Z/t_1 ⊕ ...`` with ``t_1 | t_2 | ...``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]  # nonzero diagonal, each dividing the next

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _normalize_diagonal(diag: list[int]) -> tuple[int, ...]:
    d = [abs(v) for v in diag if v]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonalize by unimodular row/column operations, pivoting on the smallest entry."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, rows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            # a remainder smaller than the pivot survived; move it onto the diagonal
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(a[t][t])
        t += 1
    return diag


def _to_sparse_rows(m) -> tuple[dict, dict]:
    if sparse.issparse(m):
        coo = m.tocoo()
        entries = zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())
    else:
        arr = np.asarray(m, dtype=object)
        if arr.ndim != 2:
            if arr.size == 0:
                return {}, {}
            raise InputError("matrix must be two-dimensional")
        entries = ((i, j, arr[i, j]) for i, j in zip(*np.nonzero(arr)))
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, j, v in entries:
        if isinstance(v, float) and not v.is_integer():
            raise InputError("matrix entries must be integers")
        v = int(v)
        if v:
            rows.setdefault(i, {})[j] = rows.get(i, {}).get(j, 0) + v
            cols.setdefault(j, set()).add(i)
    return rows, cols


def smith_normal_form(m) -> SmithForm:
    """Invariant factors of an integer matrix (dense array-like or scipy sparse).

    Unit pivots are eliminated sparsely first; what is left is diagonalized
    densely with smallest-entry pivoting.
    """
    rows, cols = _to_sparse_rows(m)
    ones = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda k: len(cols[k])):
            if c not in cols:
                continue
            units = [r for r in cols[c] if abs(rows[r][c]) == 1]
            if not units:
                continue
            r = min(units, key=lambda k: (len(rows[k]), k))
            pivot_row = rows.pop(r)
            p = pivot_row[c]
            for j in pivot_row:
                cols[j].discard(r)
            for r2 in list(cols[c]):
                row2 = rows[r2]
                f = row2[c] * p
                for j, v in pivot_row.items():
                    nv = row2.get(j, 0) - f * v
                    if nv:
                        if j not in row2:
                            cols[j].add(r2)
                        row2[j] = nv
                    elif j in row2:
                        del row2[j]
                        cols[j].discard(r2)
                if not row2:
                    del rows[r2]
            for j in pivot_row:
                if not cols[j]:
                    del cols[j]
            cols.pop(c, None)
            ones += 1
            progress = True
    diag = [1] * ones
    if rows:
        rlist = sorted(rows)
        clist = sorted(cols)
        cpos = {c: k for k, c in enumerate(clist)}
        dense = [[0] * len(clist) for _ in rlist]
        for k, r in enumerate(rlist):
            for c, v in rows[r].items():
                dense[k][cpos[c]] = v
        diag += _dense_diagonal(dense)
    return SmithForm(_normalize_diagonal(diag))


# -- chain complexes ---------------------------------------------------------

def _check_degree(q: FiniteQuandle, n: int, cap: int):
    if n < 1:
        raise InputError("chain degree must be at least 1")
    if n > cap:
        raise ResourceError(f"chain degree {n} exceeds cap {cap}")
    if q.size ** n > TUPLE_CAP:
        raise ResourceError(f"{q.size}^{n} tuples exceeds the cap of {TUPLE_CAP}")


def _all_tuples(size: int, n: int) -> np.ndarray:
    grids = np.indices((size,) * n).reshape(n, -1).T
    return grids.astype(np.int64)


def chain_basis(q: FiniteQuandle, n: int, quandle: bool = True) -> np.ndarray:
    """Basis tuples of degree ``n`` in lexicographic order."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    t = _all_tuples(q.size, n)
    if quandle and n > 1:
        t = t[np.all(t[:, 1:] != t[:, :-1], axis=1)]
    return t


def _encode(t: np.ndarray, size: int) -> np.ndarray:
    code = np.zeros(t.shape[0], dtype=np.int64)
    for k in range(t.shape[1]):
        code = code * size + t[:, k]
    return code


def boundary_matrix(q: FiniteQuandle, n: int, quandle: bool = True, cap: int = DEGREE_CAP + 1) -> sparse.csr_matrix:
    """``∂_n : C_n -> C_{n-1}`` as a sparse integer matrix (rows index ``C_{n-1}``)."""
    _check_degree(q, n, cap)
    src = chain_basis(q, n, quandle)
    if n == 1:
        return sparse.csr_matrix((0, src.shape[0]), dtype=np.int64)
    dst = chain_basis(q, n - 1, quandle)
    lookup = np.full(q.size ** (n - 1), -1, dtype=np.int64)
    lookup[_encode(dst, q.size)] = np.arange(dst.shape[0])
    rows, cols, vals = [], [], []
    col_idx = np.arange(src.shape[0])
    rt = np.asarray(q.rt)
    for i in range(1, n):  # 0-based position of the deleted entry; sign (-1)^(i+1)
        sign = 1 if (i + 1) % 2 == 0 else -1
        face = np.delete(src, i, axis=1)
        acted = np.concatenate([rt[src[:, :i], src[:, i:i + 1]], src[:, i + 1:]], axis=1)
        for tuples, s in ((face, sign), (acted, -sign)):
            r = lookup[_encode(tuples, q.size)]
            keep = r >= 0
            rows.append(r[keep])
            cols.append(col_idx[keep])
            vals.append(np.full(int(keep.sum()), s, dtype=np.int64))
    mat = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dst.shape[0], src.shape[0]), dtype=np.int64,
    ).tocsr()
    mat.sum_duplicates()
    mat.eliminate_zeros()
    return mat


def rack_boundary(q: FiniteQuandle, n: int, cap: int = DEGREE_CAP + 1):
    return boundary_matrix(q, n, quandle=False, cap=cap)


def quandle_boundary(q: FiniteQuandle, n: int, cap: int = DEGREE_CAP + 1):
    return boundary_matrix(q, n, quandle=True, cap=cap)


def boundary_squares_to_zero(q: FiniteQuandle, n: int, quandle: bool = True) -> bool:
    """Check ``∂_{n-1} ∘ ∂_n = 0``."""
    if n < 2:
        return True
    prod = boundary_matrix(q, n - 1, quandle) @ boundary_matrix(q, n, quandle)
    return prod.count_nonzero() == 0


def _homology(q: FiniteQuandle, n: int, quandle: bool, cap: int) -> HomologyGroup:
    if n < 1:
        raise InputError("homology degree must be at least 1")
    if n > cap:
        raise ResourceError(f"homology degree {n} exceeds cap {cap}")
    d_n = boundary_matrix(q, n, quandle, cap=cap + 1)
    d_next = boundary_matrix(q, n + 1, quandle, cap=cap + 1)
    dim = d_n.shape[1]
    rank_n = smith_normal_form(d_n).rank if d_n.nnz else 0
    snf = smith_normal_form(d_next)
    return HomologyGroup(dim - rank_n - snf.rank, tuple(d for d in snf.invariant_factors if d > 1))


def quandle_homology(q: FiniteQuandle, n: int, cap: int = DEGREE_CAP) -> HomologyGroup:
    return _homology(q, n, True, cap)


def rack_homology(q: FiniteQuandle, n: int, cap: int = DEGREE_CAP) -> HomologyGroup:
    return _homology(q, n, False, cap)


def cohomology(q: FiniteQuandle, n: int, modulus: int = 0, quandle: bool = True,
               cap: int = DEGREE_CAP) -> HomologyGroup:
    """``H^n`` with coefficients in ``Z/modulus`` (``Z`` for 0) by universal coefficients."""
    if modulus < 0 or modulus == 1:
        raise InputError("coefficient modulus must be 0 or at least 2")
    h_n = _homology(q, n, quandle, cap)
    h_prev = _homology(q, n - 1, quandle, cap) if n > 1 else HomologyGroup(0)
    if modulus == 0:
        return HomologyGroup(h_n.rank, h_prev.torsion)
    orders = [modulus] * h_n.rank
    orders += [gcd(d, modulus) for d in h_n.torsion]  # Hom(Z/d, Z/m)
    orders += [gcd(d, modulus) for d in h_prev.torsion]  # Ext(Z/d, Z/m)
    return HomologyGroup(0, tuple(d for d in _normalize_diagonal(orders) if d > 1))

"""Finite quandles stored as operation tables.

Elements are the indices ``0..n-1``.  ``rt[x, y]`` is ``x ▷ y`` and
``lt[x, y]`` is ``x ◁ y``; ``lt`` is always derived by inverting the
columns of ``rt``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import gcd
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .closure import generated_closure
from .errors import ClosureError, ConsistencyError, InputError, ResourceError
from .groups import GroupElement, generated_group, transpositions
from .unionfind import UnionFind

MAX_VIOLATIONS = 100
HOM_CAP = 64


@dataclass
class AxiomReport:
    """Outcome of :func:`check_axioms`.

    ``violations`` holds ``(axiom, witness)`` pairs, at most 100 of them.
    Witnesses are ``(x,)`` for idempotence, ``(x1, x2, y)`` with
    ``x1 ▷ y == x2 ▷ y`` for invertibility, and ``(x, y, z)`` for
    distributivity.
    """

    violations: list = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        lines = ["fail"] + [f"{axiom} {list(w)}" for axiom, w in self.violations]
        if self.truncated:
            lines.append("...")
        return "\n".join(lines)


def _as_table(rt) -> np.ndarray:
    try:
        table = np.array(rt)
    except (TypeError, ValueError) as exc:
        raise InputError(f"operation table is not a rectangular array: {exc}") from exc
    if table.size and table.dtype.kind not in "iu":
        raise InputError(f"operation table entries must be integers, got dtype {table.dtype}")
    table = table.astype(np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InputError(f"operation table must be a non-empty square matrix, got shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise InputError(f"operation table entries must lie in 0..{n - 1}")
    return table


def check_axioms(rt, cap: int = MAX_VIOLATIONS) -> AxiomReport:
    """Exhaustively check idempotence, right invertibility and self-distributivity."""
    table = _as_table(rt)
    n = table.shape[0]
    report = AxiomReport()

    def add(axiom, witness):
        if len(report.violations) >= cap:
            report.truncated = True
            return False
        report.violations.append((axiom, tuple(int(w) for w in witness)))
        return True

    for x in np.flatnonzero(table[np.arange(n), np.arange(n)] != np.arange(n)):
        if not add("idempotence", (x,)):
            return report

    for y in range(n):
        first = {}
        for x in range(n):
            v = int(table[x, y])
            if v in first:
                if not add("invertibility", (first[v], x, y)):
                    return report
            else:
                first[v] = x

    for z in range(n):
        col = table[:, z]
        lhs = col[table]  # lhs[x, y] = (x ▷ y) ▷ z
        rhs = table[col[:, None], col[None, :]]  # rhs[x, y] = (x ▷ z) ▷ (y ▷ z)
        bad = np.argwhere(lhs != rhs)
        for x, y in bad:
            if not add("distributivity", (x, y, z)):
                return report
    return report


class FiniteQuandle:
    """A finite quandle given by its right operation table."""

    def __init__(self, rt, labels: Sequence[str] | None = None, check: bool = True,
                 embedding: Sequence[GroupElement] | None = None):
        table = _as_table(rt)
        if check:
            report = check_axioms(table)
            if not report.ok:
                axiom, witness = report.violations[0]
                raise InputError(f"table violates the quandle axioms: {axiom} at {list(witness)}")
        n = table.shape[0]
        left = np.empty_like(table)
        cols = np.arange(n)
        for y in range(n):
            left[table[:, y], y] = cols
        table.setflags(write=False)
        left.setflags(write=False)
        self.rt = table
        self.lt = left
        if labels is not None:
            labels = [str(s) for s in labels]
            if len(labels) != n or len(set(labels)) != n:
                raise InputError("labels must be distinct and one per element")
        self.labels = labels
        if embedding is not None:
            embedding = list(embedding)
            if len(embedding) != n:
                raise InputError("embedding must give one group element per quandle element")
        self.embedding = embedding

    @property
    def size(self) -> int:
        return self.rt.shape[0]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteQuandle(size={self.size})"

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and np.array_equal(self.rt, other.rt)

    def __hash__(self):
        return hash(self.rt.tobytes())

    def right(self, x: int, y: int) -> int:
        return int(self.rt[x, y])

    def left(self, x: int, y: int) -> int:
        return int(self.lt[x, y])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index(self, key) -> int:
        """Resolve an element given as an index or a label."""
        if isinstance(key, (int, np.integer)) and not isinstance(key, bool):
            if 0 <= key < self.size:
                return int(key)
            raise InputError(f"element {key} out of range 0..{self.size - 1}")
        if self.labels and key in self.labels:
            return self.labels.index(key)
        raise InputError(f"unknown element {key!r}")

    def acts_trivially(self, y: int) -> bool:
        return bool(np.array_equal(self.rt[:, y], np.arange(self.size)))

    def inner_permutation(self, y: int) -> GroupElement:
        """The permutation ``x ↦ x ▷ y``."""
        return GroupElement(tuple(int(v) for v in self.rt[:, y]))

    def to_json(self) -> dict:
        out = {"size": self.size, "rt": self.rt.tolist()}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FiniteQuandle":
        if not isinstance(data, dict) or "rt" not in data:
            raise InputError("quandle JSON needs an 'rt' table")
        q = cls(data["rt"], data.get("labels"))
        if "size" in data and data["size"] != q.size:
            raise InputError(f"declared size {data['size']} does not match table size {q.size}")
        return q


# -- constructors -----------------------------------------------------------

def trivial_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle(np.tile(np.arange(n)[:, None], (1, n)), check=False)


def alexander_quandle(m: int, t: int) -> FiniteQuandle:
    """``Z/m`` with ``x ▷ y = t(x - y) + y``."""
    if m < 1:
        raise InputError("modulus must be positive")
    if gcd(t, m) != 1:
        raise InputError(f"{t} is not a unit modulo {m}")
    x = np.arange(m)[:, None]
    y = np.arange(m)[None, :]
    return FiniteQuandle((t * (x - y) + y) % m)


def dihedral_quandle(n: int) -> FiniteQuandle:
    """``R_n``: ``x ▷ y = 2y - x mod n``."""
    return alexander_quandle(n, -1 % n if n > 1 else 0)


def conjugation_quandle(carrier: Sequence[GroupElement], labels: Sequence[str] | None = None) -> FiniteQuandle:
    """Quandle on a conjugation-closed set of group elements, ``x ▷ y = y^-1 x y``."""
    carrier = [g if isinstance(g, GroupElement) else GroupElement(tuple(g)) for g in carrier]
    if not carrier:
        raise InputError("carrier must be non-empty")
    if len(set(carrier)) != len(carrier):
        raise InputError("carrier contains repeated elements")
    where = {g: i for i, g in enumerate(carrier)}
    n = len(carrier)
    rt = np.empty((n, n), dtype=np.int64)
    for j, y in enumerate(carrier):
        yinv = y.inverse()
        for i, x in enumerate(carrier):
            c = yinv * x * y
            if c not in where:
                raise ClosureError(f"carrier not closed under conjugation: {x} conjugated by {y} gives {c}")
            rt[i, j] = where[c]
    if labels is None:
        labels = [str(g) for g in carrier]
    return FiniteQuandle(rt, labels, embedding=carrier)


def transposition_quandle(degree: int) -> FiniteQuandle:
    return conjugation_quandle(transpositions(degree))


def genus2_seventeen() -> FiniteQuandle:
    """The 17-element conjugation quandle inside ``Z/10 x S6``.

    Carrier ``{(0,e), (2,e)} ∪ {(1,(a b))}``; the group elements are kept in
    ``.embedding``.
    """
    e = GroupElement.identity(6, 10)
    carrier = [e, GroupElement(e.perm, 2, 10)]
    carrier += [GroupElement.transposition(6, a, b, 1, 10) for a, b in combinations(range(6), 2)]
    return conjugation_quandle(carrier)


# -- augmentation -----------------------------------------------------------

@dataclass
class InnerAugmentation:
    generators: list  # generators[q] is ℓ(q) = (- ▷ q)
    group_elements_checked: int
    exhaustive: bool


def inner_augmentation(q: FiniteQuandle, sample: int = 10_000) -> InnerAugmentation:
    """ℓ(q) = (- ▷ q), verified against both augmentation axioms."""
    n = q.size
    gens = [q.inner_permutation(y) for y in range(n)]
    for y in range(n):
        if gens[y](y) != y:
            raise ConsistencyError(f"augmentation axiom q·ℓ(q) = q fails at {y}")
    group = generated_group(dict.fromkeys(gens), limit=sample + 1)
    exhaustive = len(group) <= sample
    group = group[:sample]
    for gamma in group:
        ginv = gamma.inverse()
        for y in range(n):
            if gens[gamma(y)] != ginv * gens[y] * gamma:
                raise ConsistencyError(f"ℓ(q·γ) = γ^-1 ℓ(q) γ fails at q={y}, γ={gamma}")
    return InnerAugmentation(gens, len(group), exhaustive)


# -- subquandles, homomorphisms ---------------------------------------------

def subquandle_generated(q: FiniteQuandle, subset: Iterable[int]) -> set[int]:
    subset = [q.index(s) for s in subset]
    if not subset:
        raise InputError("subset must be non-empty")
    return generated_closure(subset, q.right, q.left)


def is_homomorphism(src: FiniteQuandle, tgt: FiniteQuandle, mapping: Sequence[int]) -> bool:
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (src.size,) or f.min() < 0 or f.max() >= tgt.size:
        return False
    return bool(np.array_equal(f[src.rt], tgt.rt[f[:, None], f[None, :]]))


@dataclass(frozen=True)
class QuandleHom:
    source: FiniteQuandle
    target: FiniteQuandle
    map: tuple[int, ...]

    def __post_init__(self):
        if not is_homomorphism(self.source, self.target, self.map):
            raise InputError("map is not a quandle homomorphism")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size


def greedy_generating_set(q: FiniteQuandle) -> list[int]:
    """Repeatedly add the element whose closure grows the current set the most."""
    gens: list[int] = []
    have: set[int] = set()
    while len(have) < q.size:
        best, best_set = None, None
        for c in range(q.size):
            if c in have:
                continue
            s = generated_closure(gens + [c], q.right, q.left)
            if best_set is None or len(s) > len(best_set):
                best, best_set = c, s
        gens.append(best)
        have = best_set
    return gens


class _HomPlan:
    """Stage-by-stage derivations used to extend a generator assignment."""

    def __init__(self, q: FiniteQuandle):
        self.gens = greedy_generating_set(q)
        self.stages = []
        known: list[int] = []
        known_set: set[int] = set()
        for j, g in enumerate(self.gens):
            derivs = []
            new = []
            if g not in known_set:
                known_set.add(g)
                new.append(g)
            active = self.gens[: j + 1]
            frontier = list(known) + ([g] if g in new else [])
            # everything reachable from the old set by the new generator, then by all generators
            queue = list(frontier)
            head = 0
            while head < len(queue):
                a = queue[head]
                head += 1
                for s in active:
                    for table, sign in ((q.rt, 1), (q.lt, -1)):
                        e = int(table[a, s])
                        if e not in known_set:
                            known_set.add(e)
                            new.append(e)
                            derivs.append((e, a, s, sign))
                            queue.append(e)
            old = np.array(known, dtype=np.int64)
            newa = np.array(new, dtype=np.int64)
            allk = np.concatenate([old, newa])
            xs = np.concatenate([np.repeat(newa, len(allk)), np.tile(old, len(newa))])
            ys = np.concatenate([np.tile(allk, len(newa)), np.repeat(newa, len(old))])
            self.stages.append((derivs, xs, ys, q.rt[xs, ys]))
            known = known + new


def _extend(plan: _HomPlan, tgt: FiniteQuandle, f: np.ndarray, stage: int) -> Iterator[np.ndarray]:
    if stage == len(plan.gens):
        yield f.copy()
        return
    derivs, xs, ys, zs = plan.stages[stage]
    g = plan.gens[stage]
    for img in range(tgt.size):
        f[g] = img
        for e, a, s, sign in derivs:
            f[e] = tgt.rt[f[a], f[s]] if sign > 0 else tgt.lt[f[a], f[s]]
        if np.array_equal(tgt.rt[f[xs], f[ys]], f[zs]):
            yield from _extend(plan, tgt, f, stage + 1)


def enumerate_homs(src: FiniteQuandle, tgt: FiniteQuandle, cap: int = HOM_CAP,
                   threads: int = 1) -> list[QuandleHom]:
    """All homomorphisms, ordered lexicographically by generator images."""
    return [QuandleHom(src, tgt, tuple(int(v) for v in f)) for f in _hom_arrays(src, tgt, cap, threads)]


def hom_count(src: FiniteQuandle, tgt: FiniteQuandle, cap: int = HOM_CAP, threads: int = 1) -> int:
    return len(_hom_arrays(src, tgt, cap, threads))


def _hom_arrays(src, tgt, cap, threads):
    if src.size > cap:
        raise ResourceError(f"source quandle has {src.size} elements, cap is {cap}")
    plan = _HomPlan(src)

    def branch(img):
        f = np.full(src.size, -1, dtype=np.int64)
        g = plan.gens[0]
        derivs, xs, ys, zs = plan.stages[0]
        f[g] = img
        for e, a, s, sign in derivs:
            f[e] = tgt.rt[f[a], f[s]] if sign > 0 else tgt.lt[f[a], f[s]]
        if not np.array_equal(tgt.rt[f[xs], f[ys]], f[zs]):
            return []
        return list(_extend(plan, tgt, f, 1))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(branch, range(tgt.size)))
    else:
        parts = [branch(i) for i in range(tgt.size)]
    return [f for part in parts for f in part]


def find_isomorphism(a: FiniteQuandle, b: FiniteQuandle, max_size: int = 8) -> tuple[int, ...] | None:
    """Brute-force isomorphism search; only for small quandles."""
    if a.size != b.size:
        return None
    if a.size > max_size:
        raise ResourceError(f"brute-force isomorphism limited to size {max_size}")
    for perm in permutations(range(b.size)):
        if is_homomorphism(a, b, perm):
            return perm
    return None


def is_isomorphism(a: FiniteQuandle, b: FiniteQuandle, mapping: Sequence[int]) -> bool:
    return a.size == b.size and len(set(mapping)) == b.size and is_homomorphism(a, b, mapping)


def subquandle(q: FiniteQuandle, elements: Iterable[int]) -> tuple[FiniteQuandle, list[int]]:
    """Restrict ``q`` to a closed subset; returns the subquandle and the inclusion."""
    elems = sorted(set(elements))
    pos = {e: i for i, e in enumerate(elems)}
    try:
        rt = [[pos[int(q.rt[x, y])] for y in elems] for x in elems]
    except KeyError as exc:
        raise ClosureError(f"subset is not closed under ▷: produces {exc.args[0]}") from exc
    labels = [q.label(e) for e in elems] if q.labels else None
    emb = [q.embedding[e] for e in elems] if q.embedding else None
    sub = FiniteQuandle(rt, labels, embedding=emb)
    return sub, elems


# -- congruences and quotients ----------------------------------------------

def congruence_quotient(q: FiniteQuandle, seeds: Iterable[tuple[int, int]]) -> tuple[FiniteQuandle, list[int]]:
    """Quotient by the smallest congruence containing ``seeds``.

    Returns the quotient quandle and the projection (element -> class index).
    Classes are numbered in order of their minimal element.
    """
    n = q.size
    uf = UnionFind(n)
    work = [(q.index(a), q.index(b)) for a, b in seeds]
    rt, lt = q.rt, q.lt
    while work:
        x, y = work.pop()
        if not uf.union(x, y):
            continue
        for table in (rt, lt):
            work.extend(zip(table[x, :].tolist(), table[y, :].tolist()))
            work.extend(zip(table[:, x].tolist(), table[:, y].tolist()))
    reps = [uf.find(x) for x in range(n)]
    order = {}
    for r in reps:
        order.setdefault(r, len(order))
    proj = [order[r] for r in reps]
    k = len(order)
    first = [0] * k
    for x in range(n - 1, -1, -1):
        first[proj[x]] = x
    qrt = [[proj[int(rt[first[i], first[j]])] for j in range(k)] for i in range(k)]
    labels = [q.label(first[i]) for i in range(k)] if q.labels else None
    quotient = FiniteQuandle(qrt, labels)
    if not is_homomorphism(q, quotient, proj):
        raise ConsistencyError("projection onto the quotient is not a homomorphism")
    return quotient, proj


def _pairs_where_unequal(a: np.ndarray, b: np.ndarray) -> list[tuple[int, int]]:
    mask = a != b
    pairs = np.unique(np.stack([a[mask], b[mask]], axis=-1).reshape(-1, 2), axis=0)
    return [tuple(p) for p in pairs.tolist()]


def involutory_seeds(q: FiniteQuandle) -> list[tuple[int, int]]:
    rt = q.rt
    x = np.arange(q.size)[:, None]
    y = np.arange(q.size)[None, :]
    twice = rt[rt[x, y], y]
    return _pairs_where_unequal(twice, np.broadcast_to(x, twice.shape))


def abelian_seeds(q: FiniteQuandle) -> list[tuple[int, int]]:
    rt = q.rt
    n = q.size
    seeds: set = set()
    idx = np.arange(n)
    for w in range(n):
        wx = rt[w, :]  # w ▷ x
        # lhs[x, y, z] = (w ▷ x) ▷ (y ▷ z); rhs[x, y, z] = (w ▷ y) ▷ (x ▷ z)
        lhs = rt[wx[:, None, None], rt[None, :, :]]
        rhs = rt[wx[None, :, None], rt[idx][:, None, :]]
        seeds.update(_pairs_where_unequal(lhs, rhs))
    return sorted(seeds)


def satisfies_involutory(q: FiniteQuandle) -> bool:
    return not involutory_seeds(q)


def satisfies_abelian(q: FiniteQuandle) -> bool:
    return not abelian_seeds(q)


def _universal(q: FiniteQuandle, seeder: Callable, check: Callable):
    quotient, proj = congruence_quotient(q, seeder(q))
    if not check(quotient):
        raise ConsistencyError("quotient does not satisfy the imposed identity")
    return quotient, proj


def universal_involutory_quotient(q: FiniteQuandle):
    """Largest quotient in which ``(x ▷ y) ▷ y = x``."""
    return _universal(q, involutory_seeds, satisfies_involutory)


def universal_abelian_quotient(q: FiniteQuandle):
    """Largest quotient in which ``(w ▷ x) ▷ (y ▷ z) = (w ▷ y) ▷ (x ▷ z)``."""
    return _universal(q, abelian_seeds, satisfies_abelian)


def orbits(q: FiniteQuandle) -> list[list[int]]:
    """Orbits of the inner automorphism group."""
    uf = UnionFind(q.size)
    for x in range(q.size):
        for y in range(q.size):
            uf.union(x, int(q.rt[x, y]))
    groups: dict[int, list[int]] = {}
    for x in range(q.size):
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(groups.values())


__all__ = [
    "AxiomReport", "FiniteQuandle", "InnerAugmentation", "QuandleHom",
    "abelian_seeds", "alexander_quandle", "check_axioms", "congruence_quotient",
    "conjugation_quandle", "dihedral_quandle", "enumerate_homs", "find_isomorphism",
    "generated_group", "genus2_seventeen", "greedy_generating_set", "hom_count",
    "inner_augmentation", "involutory_seeds", "is_homomorphism", "is_isomorphism",
    "orbits", "satisfies_abelian", "satisfies_involutory", "subquandle",
    "subquandle_generated", "transposition_quandle", "trivial_quandle",
    "universal_abelian_quotient", "universal_involutory_quotient",
]

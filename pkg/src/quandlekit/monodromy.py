"""Lefschetz fibration monodromy as tuples of vanishing cycles.

A datum is an ordered tuple of elements of a target quandle.  Each target
carries a concrete augmentation group acting on the right:

* ``torus``    slopes, ``SL(2, Z)`` twist matrices, ``c · M = M^-1 c``
* ``homology`` ``H_1(Σ_g; R)`` (optionally reduced mod ±), transvections on
  row vectors, ``x · M = x M``
* ``finite``   a :class:`FiniteQuandle`; its group embedding when it has one,
  otherwise the inner permutations ``x ↦ x ▷ q``

Products are always taken left to right in tuple order.  These groups are
computable stand-ins for the mapping class group, so the sphere product
condition checked here is only necessary.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any

from . import homology as hq
from . import torus
from .closure import generated_closure
from .constructors import load_quandle
from .errors import DomainError, InputError, ResourceError
from .finite import FiniteQuandle, QuandleHom
from .free import FreeQuandleElement, evaluate
from .groups import GroupElement

ORBIT_CAP = 1_000_000
SUBQUANDLE_CAP = 10_000
BASES = ("disk", "sphere")


class TorusTarget:
    kind = "torus"
    finite = False

    def right(self, a, b):
        return torus.op_right(a, b)

    def left(self, a, b):
        return torus.op_left(a, b)

    def validate(self, c):
        if not isinstance(c, torus.Slope):
            raise InputError(f"{c!r} is not a slope")
        return c

    def parse(self, value):
        return torus.Slope.from_json(value)

    def dump(self, c):
        return c.to_json()

    def sort_key(self, c):
        return (c.x, c.y)

    def augment(self, c):
        return torus.slope_to_matrix(c)

    def identity(self):
        return torus.IDENTITY

    def mul(self, g, h):
        return torus.mat_mul(g, h)

    def act(self, c, g):
        return torus.act(c, g)

    def parse_group(self, value):
        try:
            (a, b), (c, d) = value
            m = ((int(a), int(b)), (int(c), int(d)))
        except (TypeError, ValueError) as exc:
            raise InputError(f"expected a 2x2 integer matrix, got {value!r}") from exc
        if a * d - b * c != 1:
            raise DomainError("matrix is not in SL(2, Z)")
        return m

    def dump_group(self, g):
        return [list(row) for row in g]

    def to_json(self):
        return {"kind": "torus"}

    def __eq__(self, other):
        return type(other) is TorusTarget

    def __hash__(self):
        return hash("torus")


class HomologyTarget:
    kind = "homology"

    def __init__(self, ring: hq.CoefficientRing, genus: int, reduced: bool = False):
        if genus < 0:
            raise InputError("genus must be non-negative")
        self.ring = hq.CoefficientRing.parse(ring)
        self.genus = genus
        self.reduced = reduced

    @property
    def finite(self):
        return bool(self.ring.modulus)

    def right(self, a, b):
        return hq.hd_right(a, b) if self.reduced else hq.aq_right(a, b)

    def left(self, a, b):
        return hq.hd_left(a, b) if self.reduced else hq.aq_left(a, b)

    def validate(self, c):
        cls = hq.ReducedHomologyElement if self.reduced else hq.HomologyElement
        if type(c) is not cls or c.ring != self.ring or c.genus != self.genus:
            raise InputError(f"{c!r} is not an element of {self.describe()}")
        return c

    def describe(self):
        return f"{'HD' if self.reduced else 'HQ'}_{self.ring}(genus {self.genus})"

    def parse(self, value):
        if isinstance(value, dict):
            value = value.get("coords")
        if not isinstance(value, (list, tuple)):
            raise InputError(f"homology cycle must be a coordinate list, got {value!r}")
        x = hq.HomologyElement(self.ring, self.genus, tuple(value))
        return hq.reduce(x) if self.reduced else x

    def dump(self, c):
        return list(c.coords)

    def sort_key(self, c):
        return c.coords

    def augment(self, c):
        return hq.augmentation_matrix(c)

    def identity(self):
        return hq.identity_matrix(2 * self.genus)

    def mul(self, g, h):
        return hq.mat_mul(g, h, self.ring)

    def act(self, c, g):
        return hq.act(c, g)

    def parse_group(self, value):
        n = 2 * self.genus
        try:
            m = tuple(tuple(self.ring.reduce(int(v)) for v in row) for row in value)
        except (TypeError, ValueError) as exc:
            raise InputError(f"expected a {n}x{n} integer matrix") from exc
        if len(m) != n or any(len(row) != n for row in m):
            raise InputError(f"expected a {n}x{n} integer matrix")
        if not hq.is_symplectic(m, self.genus, self.ring):
            raise DomainError("matrix does not preserve the intersection form")
        return m

    def dump_group(self, g):
        return [list(row) for row in g]

    def to_json(self):
        return {"kind": "homology", "ring": str(self.ring), "genus": self.genus, "reduced": self.reduced}

    def __eq__(self, other):
        return isinstance(other, HomologyTarget) and (self.ring, self.genus, self.reduced) == (
            other.ring, other.genus, other.reduced)

    def __hash__(self):
        return hash((self.ring, self.genus, self.reduced))


class FiniteTarget:
    kind = "finite"
    finite = True

    def __init__(self, quandle: FiniteQuandle, name: str | None = None):
        self.quandle = quandle
        self.name = name
        self._inner = [quandle.inner_permutation(q) for q in range(quandle.size)]
        if quandle.embedding is not None:
            self._where = {g: i for i, g in enumerate(quandle.embedding)}

    @property
    def embedded(self) -> bool:
        return self.quandle.embedding is not None

    def right(self, a, b):
        return int(self.quandle.rt[a, b])

    def left(self, a, b):
        return int(self.quandle.lt[a, b])

    def validate(self, c):
        if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < self.quandle.size:
            raise InputError(f"{c!r} is not an element index of the target quandle")
        return c

    def parse(self, value):
        return self.quandle.index(value)

    def dump(self, c):
        return self.quandle.label(c) if self.quandle.labels else c

    def sort_key(self, c):
        return c

    def augment(self, c):
        return self.quandle.embedding[c] if self.embedded else self._inner[c]

    def inner(self, c) -> GroupElement:
        return self._inner[c]

    def identity(self):
        if self.embedded:
            g = self.quandle.embedding[0]
            return GroupElement.identity(g.degree, g.modulus)
        return GroupElement.identity(self.quandle.size)

    def mul(self, g, h):
        return g * h

    def act(self, c, g):
        if self.embedded:
            image = g.inverse() * self.quandle.embedding[c] * g
            if image not in self._where:
                raise DomainError(f"conjugation by {g} does not preserve the target quandle")
            return self._where[image]
        return g(c)

    def parse_group(self, value):
        if isinstance(value, list):
            value = {"perm": value}
        g = GroupElement.from_json(value)
        ident = self.identity()
        if (g.degree, g.modulus) != (ident.degree, ident.modulus):
            raise InputError("group element has the wrong degree or modulus for this target")
        if not self.embedded:
            q = self.quandle
            if any(g(int(q.rt[x, y])) != int(q.rt[g(x), g(y)]) for x in range(q.size) for y in range(q.size)):
                raise DomainError("permutation is not an automorphism of the target quandle")
        return g

    def dump_group(self, g):
        return g.to_json()

    def to_json(self):
        return {"kind": "finite", "quandle": self.name if self.name else self.quandle.to_json()}

    def __eq__(self, other):
        return isinstance(other, FiniteTarget) and self.quandle == other.quandle

    def __hash__(self):
        return hash(self.quandle)


def target_from_json(data) -> Any:
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("target must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "torus":
        return TorusTarget()
    if kind == "homology":
        try:
            return HomologyTarget(hq.CoefficientRing.parse(data.get("ring", "Z")), int(data["genus"]),
                                  bool(data.get("reduced", False)))
        except KeyError as exc:
            raise InputError("homology target needs a genus") from exc
    if kind == "finite":
        spec = data.get("quandle")
        if spec is None:
            raise InputError("finite target needs a 'quandle'")
        return FiniteTarget(load_quandle(spec), spec if isinstance(spec, str) else None)
    raise InputError(f"unknown target kind {kind!r}")


@dataclass(frozen=True)
class MonodromyDatum:
    base: str
    target: Any
    cycles: tuple = field(default=())

    def __post_init__(self):
        if self.base not in BASES:
            raise InputError(f"base must be one of {BASES}, got {self.base!r}")
        object.__setattr__(self, "cycles", tuple(self.target.validate(c) for c in self.cycles))

    def __len__(self):
        return len(self.cycles)

    def with_cycles(self, cycles) -> "MonodromyDatum":
        return MonodromyDatum(self.base, self.target, tuple(cycles))

    def augmentation(self) -> list:
        return [self.target.augment(c) for c in self.cycles]

    def to_json(self) -> dict:
        return {"base": self.base, "target": self.target.to_json(),
                "cycles": [self.target.dump(c) for c in self.cycles]}

    @classmethod
    def from_json(cls, data: dict) -> "MonodromyDatum":
        if not isinstance(data, dict):
            raise InputError("monodromy datum must be a JSON object")
        target = target_from_json(data.get("target"))
        cycles = data.get("cycles", [])
        if not isinstance(cycles, list):
            raise InputError("'cycles' must be a list")
        return cls(data.get("base", "disk"), target, tuple(target.parse(c) for c in cycles))


# -- moves ------------------------------------------------------------------

def _hurwitz(target, cycles: tuple, i: int, forward: bool) -> tuple:
    a, b = cycles[i], cycles[i + 1]
    if forward:
        pair = (b, target.right(a, b))
    else:
        pair = (target.left(b, a), a)
    return cycles[:i] + pair + cycles[i + 2:]


def hurwitz_move(d: MonodromyDatum, i: int, direction: str = "forward") -> MonodromyDatum:
    """Swap cycles ``i`` and ``i + 1``, conjugating one by the other.

    forward:  (c_i, c_i+1) -> (c_i+1, c_i ▷ c_i+1)
    backward: (c_i, c_i+1) -> (c_i+1 ◁ c_i, c_i)
    """
    if direction not in ("forward", "backward"):
        raise InputError(f"direction must be 'forward' or 'backward', got {direction!r}")
    if not 0 <= i < len(d.cycles) - 1:
        raise InputError(f"move index {i} out of range for {len(d.cycles)} cycles")
    return d.with_cycles(_hurwitz(d.target, d.cycles, i, direction == "forward"))


def random_moves(d: MonodromyDatum, count: int, rng: random.Random) -> MonodromyDatum:
    if len(d.cycles) < 2:
        return d
    for _ in range(count):
        d = hurwitz_move(d, rng.randrange(len(d.cycles) - 1), rng.choice(("forward", "backward")))
    return d


def total_monodromy(d: MonodromyDatum):
    g = d.target.identity()
    for c in d.cycles:
        g = d.target.mul(g, d.target.augment(c))
    return g


@dataclass(frozen=True)
class SphereCheck:
    passed: bool
    residual: Any
    note: str = "necessary condition only: checked in a computable quotient of the mapping class group"

    def __bool__(self):
        return self.passed


def sphere_check(d: MonodromyDatum) -> SphereCheck:
    """Check that the ordered product of twists is the identity."""
    if d.base != "sphere":
        raise DomainError("the product condition applies to sphere bases")
    g = total_monodromy(d)
    return SphereCheck(g == d.target.identity(), g)


def global_conjugate(d: MonodromyDatum, h) -> MonodromyDatum:
    return d.with_cycles(d.target.act(c, h) for c in d.cycles)


def cyclic_rotate(d: MonodromyDatum) -> MonodromyDatum:
    """Move the first cycle to the end (sphere bases only)."""
    if d.base != "sphere":
        raise DomainError("cyclic rotation is only meaningful over a sphere base")
    return d.with_cycles(d.cycles[1:] + d.cycles[:1])


# -- orbit canonicalization -------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    datum: MonodromyDatum
    orbit_size: int


def orbit(d: MonodromyDatum, use_cyclic: bool = False, use_global_conj: bool = False,
          cap: int = ORBIT_CAP) -> set:
    """All tuples reachable by Hurwitz moves and the optional symmetries."""
    target = d.target
    if use_cyclic and d.base != "sphere":
        raise DomainError("cyclic rotation is only meaningful over a sphere base")
    conj = []
    if use_global_conj:
        if not isinstance(target, FiniteTarget):
            raise DomainError("global conjugation search needs a finite target")
        conj = [target.inner(q).perm for q in range(target.quandle.size)]
        conj = list(dict.fromkeys(p for p in conj if list(p) != list(range(len(p)))))
    if len(d.cycles) > 8:
        raise ResourceError(f"orbit search supports at most 8 cycles, got {len(d.cycles)}")
    n = len(d.cycles)
    start = d.cycles
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        nbrs = []
        for i in range(n - 1):
            nbrs.append(_hurwitz(target, t, i, True))
            nbrs.append(_hurwitz(target, t, i, False))
        if use_cyclic and n > 1:
            nbrs.append(t[1:] + t[:1])
        for p in conj:
            nbrs.append(tuple(p[c] for c in t))
        for u in nbrs:
            if u not in seen:
                seen.add(u)
                if len(seen) > cap:
                    raise ResourceError(f"orbit exceeds cap {cap} (visited {len(seen)} tuples)")
                queue.append(u)
    return seen


def orbit_canonical(d: MonodromyDatum, use_cyclic: bool = False, use_global_conj: bool = False,
                    cap: int = ORBIT_CAP) -> CanonicalForm:
    """Lexicographically least tuple in the orbit of ``d``."""
    members = orbit(d, use_cyclic, use_global_conj, cap)
    key = d.target.sort_key
    best = min(members, key=lambda t: tuple(key(c) for c in t))
    return CanonicalForm(d.with_cycles(best), len(members))


# -- quandle monodromy and derived invariants --------------------------------

def quandle_monodromy_eval(d: MonodromyDatum, a: FreeQuandleElement):
    """Image of a free quandle element under generator ``i`` ↦ cycle ``i``."""
    if a.ngens != len(d.cycles):
        raise InputError(f"element has {a.ngens} generators but the datum has {len(d.cycles)} cycles")
    return evaluate(a, d.cycles, d.target.right, d.target.left)


def homology_monodromy(d: MonodromyDatum) -> MonodromyDatum:
    """Push a homology-valued datum into the reduced (±) quandle."""
    t = d.target
    if not isinstance(t, HomologyTarget):
        raise DomainError("homology monodromy needs a homology target")
    reduced = HomologyTarget(t.ring, t.genus, reduced=True)
    return MonodromyDatum(d.base, reduced, tuple(hq.reduce(c) for c in d.cycles))


def count_lifts(d: MonodromyDatum, f: QuandleHom) -> int:
    """Number of tuples in ``X^n`` mapping onto ``d.cycles`` under ``f: X -> Y``."""
    t = d.target
    if not isinstance(t, FiniteTarget) or t.quandle != f.target:
        raise DomainError("cycles must lie in the codomain of the projection")
    fibers: dict[int, int] = {}
    for v in f.map:
        fibers[v] = fibers.get(v, 0) + 1
    count = 1
    for c in d.cycles:
        if c not in fibers:
            raise DomainError(f"cycle {t.dump(c)!r} is not in the image of the projection")
        count *= fibers[c]
    return count


def lift_count_orbit_check(d: MonodromyDatum, f: QuandleHom, cap: int = ORBIT_CAP) -> dict:
    """Tabulate lift counts over the Hurwitz orbit.

    Returns ``{"invariant": bool, "counts": {count: tuples}, "witness": ...}``;
    ``witness`` is a pair of orbit tuples with different counts, if any.
    """
    counts: dict[int, list] = {}
    for t in sorted(orbit(d, cap=cap)):
        counts.setdefault(count_lifts(d.with_cycles(t), f), []).append(t)
    witness = None
    if len(counts) > 1:
        keys = sorted(counts)
        witness = (counts[keys[0]][0], counts[keys[1]][0])
    return {"invariant": len(counts) <= 1, "counts": {k: len(v) for k, v in counts.items()}, "witness": witness}


def generated_subquandle(d: MonodromyDatum, cap: int = SUBQUANDLE_CAP) -> frozenset | None:
    """Closure of the cycle set; None when it has more than ``cap`` elements."""
    if not d.cycles:
        return frozenset()
    try:
        return frozenset(generated_closure(d.cycles, d.target.right, d.target.left, cap=cap))
    except ResourceError:
        return None


def invariant_report(d: MonodromyDatum, cap: int = ORBIT_CAP, subquandle_cap: int = SUBQUANDLE_CAP) -> dict:
    """Hurwitz-invariant quantities of a datum, as JSON-ready values."""
    t = d.target
    sub = generated_subquandle(d, subquandle_cap)
    report = {
        "cycles": len(d.cycles),
        "total_monodromy": t.dump_group(total_monodromy(d)),
        "total_monodromy_is_identity": total_monodromy(d) == t.identity(),
        "generated_subquandle_size": None if sub is None else len(sub),
    }
    if sub is not None and isinstance(t, FiniteTarget):
        report["generated_subquandle"] = [t.dump(c) for c in sorted(sub)]
    if isinstance(t, FiniteTarget) and len(d.cycles) <= 8:
        canon = orbit_canonical(d, cap=cap)
        report["canonical_form"] = [t.dump(c) for c in canon.datum.cycles]
        report["orbit_size"] = canon.orbit_size
    if isinstance(t, HomologyTarget) and not t.reduced:
        report["homology_monodromy"] = [list(c.coords) for c in homology_monodromy(d).cycles]
    if d.base == "sphere":
        report["sphere_check"] = sphere_check(d).passed
    return report


def elliptic_datum(repeats: int = 6, base: str = "sphere") -> MonodromyDatum:
    """Slopes 0 and ∞ alternating ``2 * repeats`` times on the torus."""
    zero, inf = torus.Slope(1, 0), torus.Slope(0, 1)
    return MonodromyDatum(base, TorusTarget(), (zero, inf) * repeats)


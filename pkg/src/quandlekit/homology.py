"""Homology quandles of closed surfaces.

``H_1(Σ_g; R)`` with basis ``a_1, b_1, ..., a_g, b_g`` and intersection form
``<a_i, b_i> = 1``.  The alternating quandle is ``x ▷ y = x + <x,y> y``; the
reduced version identifies ``v`` with ``-v``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import InputError
from .torus import Slope


@dataclass(frozen=True, order=True)
class CoefficientRing:
    """``Z`` when ``modulus == 0``, otherwise ``Z/modulus``."""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise InputError("modulus must be 0 (integers) or at least 2")

    def reduce(self, v: int) -> int:
        return v % self.modulus if self.modulus else v

    def __str__(self):
        return f"Z/{self.modulus}" if self.modulus else "Z"

    @classmethod
    def parse(cls, text) -> "CoefficientRing":
        if isinstance(text, CoefficientRing):
            return text
        text = str(text).strip()
        if text == "Z":
            return cls(0)
        if text.startswith("Z/"):
            try:
                return cls(int(text[2:]))
            except ValueError:
                pass
        raise InputError(f"ring must be 'Z' or 'Z/m', got {text!r}")


Z = CoefficientRing(0)


@dataclass(frozen=True, order=True)
class HomologyElement:
    ring: CoefficientRing
    genus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if self.genus < 0 or len(coords) != 2 * self.genus:
            raise InputError(f"genus {self.genus} needs {2 * self.genus} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", tuple(self.ring.reduce(c) for c in coords))

    def __neg__(self):
        return type(self)(self.ring, self.genus, tuple(-c for c in self.coords))

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "genus": self.genus, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data: dict):
        try:
            return cls(CoefficientRing.parse(data["ring"]), int(data["genus"]), tuple(data["coords"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad homology element: {data!r}") from exc


def _canonical(ring: CoefficientRing, coords: tuple[int, ...]) -> tuple[int, ...]:
    neg = tuple(ring.reduce(-c) for c in coords)
    if ring.modulus:
        return min(coords, neg)
    for c in coords:
        if c:
            return coords if c > 0 else neg
    return coords


class ReducedHomologyElement(HomologyElement):
    """Canonical representative of ``{v, -v}``.

    Over ``Z`` the first nonzero coordinate is positive; over ``Z/m`` the
    lexicographically smaller of the two residue vectors is kept.
    """

    def __post_init__(self):
        super().__post_init__()
        if _canonical(self.ring, self.coords) != self.coords:
            raise InputError(f"{list(self.coords)} is not a canonical ± representative; use reduce()")

    def __neg__(self):
        return self

    def lift(self) -> HomologyElement:
        return HomologyElement(self.ring, self.genus, self.coords)


def element(coords, ring="Z", genus: int | None = None) -> HomologyElement:
    coords = tuple(coords)
    return HomologyElement(CoefficientRing.parse(ring), len(coords) // 2 if genus is None else genus, coords)


def _match(x: HomologyElement, y: HomologyElement):
    if x.ring != y.ring or x.genus != y.genus:
        raise InputError(f"elements over {x.ring}, g={x.genus} and {y.ring}, g={y.genus} do not match")


def pairing(x: HomologyElement, y: HomologyElement) -> int:
    _match(x, y)
    s = 0
    for i in range(0, len(x.coords), 2):
        s += x.coords[i] * y.coords[i + 1] - x.coords[i + 1] * y.coords[i]
    return x.ring.reduce(s)


def _combine(x: HomologyElement, k: int, y: HomologyElement) -> HomologyElement:
    return HomologyElement(x.ring, x.genus, tuple(a + k * b for a, b in zip(x.coords, y.coords)))


def aq_right(x: HomologyElement, y: HomologyElement) -> HomologyElement:
    """``x + <x,y> y``."""
    return _combine(x, pairing(x, y), y)


def aq_left(x: HomologyElement, y: HomologyElement) -> HomologyElement:
    """``x - <x,y> y``."""
    return _combine(x, -pairing(x, y), y)


def reduce(x: HomologyElement) -> ReducedHomologyElement:
    return ReducedHomologyElement(x.ring, x.genus, _canonical(x.ring, x.coords))


def _lift(x: HomologyElement) -> HomologyElement:
    return HomologyElement(x.ring, x.genus, x.coords)


def hd_right(x: HomologyElement, y: HomologyElement) -> ReducedHomologyElement:
    """Operation of the reduced quandle; accepts any lifts."""
    return reduce(aq_right(_lift(x), _lift(y)))


def hd_left(x: HomologyElement, y: HomologyElement) -> ReducedHomologyElement:
    return reduce(aq_left(_lift(x), _lift(y)))


def pairing_matrix(genus: int) -> list[list[int]]:
    """Gram matrix ``J`` with ``<x, y> = x^T J y``."""
    j = [[0] * (2 * genus) for _ in range(2 * genus)]
    for i in range(genus):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


def transvection_matrix(y: HomologyElement) -> tuple[tuple[int, ...], ...]:
    """Matrix (acting on column vectors) of ``x ↦ x + <x,y> y``."""
    n = 2 * y.genus
    jy = [0] * n  # <e_k, y> for each basis vector
    for i in range(y.genus):
        jy[2 * i] = y.coords[2 * i + 1]
        jy[2 * i + 1] = -y.coords[2 * i]
    return tuple(
        tuple(y.ring.reduce((r == c) + y.coords[r] * jy[c]) for c in range(n)) for r in range(n)
    )


def mat_mul(p, q, ring: CoefficientRing = Z):
    cols = list(zip(*q))
    return tuple(tuple(ring.reduce(sum(a * b for a, b in zip(row, col))) for col in cols) for row in p)


def mat_transpose(m):
    return tuple(zip(*m))


def symplectic_inverse(m, genus: int, ring: CoefficientRing = Z):
    """Inverse of a symplectic matrix: ``J^-1 M^T J`` with ``J^-1 = -J``."""
    j = pairing_matrix(genus)
    neg_j = [[-v for v in row] for row in j]
    return mat_mul(mat_mul(neg_j, mat_transpose(m), ring), j, ring)


def is_symplectic(m, genus: int, ring: CoefficientRing = Z) -> bool:
    j = tuple(tuple(ring.reduce(v) for v in row) for row in pairing_matrix(genus))
    return mat_mul(mat_mul(mat_transpose(m), j, ring), m, ring) == j


def identity_matrix(n: int):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def apply_matrix(m, x: HomologyElement) -> HomologyElement:
    return HomologyElement(x.ring, x.genus, tuple(sum(a * b for a, b in zip(row, x.coords)) for row in m))


def augmentation_matrix(y: HomologyElement):
    """The twist about ``y`` as a matrix acting on row vectors.

    Transpose of :func:`transvection_matrix`; products of these compose left
    to right, matching the right action :func:`act`.
    """
    return mat_transpose(transvection_matrix(y))


def act(x: HomologyElement, m) -> HomologyElement:
    """Right action ``x · M = x M`` on row vectors.

    Keeps the reduced type when given a reduced element.
    """
    coords = tuple(sum(x.coords[i] * m[i][j] for i in range(len(x.coords))) for j in range(len(m[0])))
    out = HomologyElement(x.ring, x.genus, coords)
    return reduce(out) if isinstance(x, ReducedHomologyElement) else out


def slope_to_reduced(s: Slope) -> ReducedHomologyElement:
    """Genus-one identification of torus slopes with reduced homology classes.

    The class of ``y/x`` is sent to ``±(x, -y)``; flipping the sign of the
    second coordinate turns the twist formula for slopes into ``x + <x,y> y``.
    """
    if s.is_contractible:
        return reduce(HomologyElement(Z, 1, (0, 0)))
    return reduce(HomologyElement(Z, 1, (s.x, -s.y)))


def random_element(rng: random.Random, ring: CoefficientRing, genus: int, bound: int = 5) -> HomologyElement:
    if ring.modulus:
        coords = tuple(rng.randrange(ring.modulus) for _ in range(2 * genus))
    else:
        coords = tuple(rng.randint(-bound, bound) for _ in range(2 * genus))
    return HomologyElement(ring, genus, coords)


def all_elements(ring: CoefficientRing, genus: int, reduced: bool = False):
    """Every element of a finite homology quandle (``ring`` must be modular)."""
    if not ring.modulus:
        raise InputError("only homology over Z/m is finite")
    seen = []
    for coords in product(range(ring.modulus), repeat=2 * genus):
        x = HomologyElement(ring, genus, coords)
        if reduced:
            if _canonical(ring, x.coords) == x.coords:
                seen.append(reduce(x))
        else:
            seen.append(x)
    return seen

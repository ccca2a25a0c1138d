"""Finite group elements: permutations with an optional cyclic factor.

Products compose left to right, so ``(a * b)`` applies ``a`` first.  This
matches the right action of an augmentation group on its quandle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError


def _check_perm(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(len(perm))):
        raise InputError(f"not a permutation of 0..{len(perm) - 1}: {list(perm)}")
    return perm


@dataclass(frozen=True, order=True)
class GroupElement:
    """Element of ``Z/modulus x Sym(degree)``; ``modulus == 0`` drops the cyclic factor."""

    perm: tuple[int, ...]
    cyclic: int = 0
    modulus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "perm", _check_perm(self.perm))
        if self.modulus < 0:
            raise InputError("modulus must be non-negative")
        if self.modulus:
            object.__setattr__(self, "cyclic", self.cyclic % self.modulus)
        elif self.cyclic:
            raise InputError("cyclic part given without a modulus")

    @classmethod
    def identity(cls, degree: int, modulus: int = 0) -> "GroupElement":
        return cls(tuple(range(degree)), 0, modulus)

    @classmethod
    def transposition(cls, degree: int, a: int, b: int, cyclic: int = 0, modulus: int = 0):
        perm = list(range(degree))
        perm[a], perm[b] = perm[b], perm[a]
        return cls(tuple(perm), cyclic, modulus)

    @property
    def degree(self) -> int:
        return len(self.perm)

    def _compatible(self, other: "GroupElement"):
        if self.degree != other.degree or self.modulus != other.modulus:
            raise InputError("group elements live in different groups")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._compatible(other)
        perm = tuple(other.perm[i] for i in self.perm)
        return GroupElement(perm, self.cyclic + other.cyclic, self.modulus)

    def inverse(self) -> "GroupElement":
        inv = [0] * self.degree
        for i, p in enumerate(self.perm):
            inv[p] = i
        return GroupElement(tuple(inv), -self.cyclic, self.modulus)

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        result = GroupElement.identity(self.degree, self.modulus)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate_by(self, g: "GroupElement") -> "GroupElement":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return self.cyclic == 0 and all(i == p for i, p in enumerate(self.perm))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def cycle_notation(self, base: int = 1) -> str:
        seen = set()
        parts = []
        for start in range(self.degree):
            if start in seen or self.perm[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.perm[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.perm[j]
            parts.append("(" + " ".join(str(c + base) for c in cycle) + ")")
        return "".join(parts) or "e"

    def __str__(self):
        if self.modulus:
            return f"({self.cyclic},{self.cycle_notation()})"
        return self.cycle_notation()

    def to_json(self) -> dict:
        out = {"perm": list(self.perm)}
        if self.modulus:
            out["cyclic"] = self.cyclic
            out["modulus"] = self.modulus
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GroupElement":
        try:
            return cls(tuple(data["perm"]), int(data.get("cyclic", 0)), int(data.get("modulus", 0)))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad group element: {data!r}") from exc


def transpositions(degree: int) -> list[GroupElement]:
    """All transpositions of ``Sym(degree)`` in lexicographic order of ``(a, b)``."""
    return [GroupElement.transposition(degree, a, b) for a, b in combinations(range(degree), 2)]


def generated_group(gens: Iterable[GroupElement], limit: int | None = None) -> list[GroupElement]:
    """Breadth-first enumeration of the group generated by ``gens``.

    Stops early once ``limit`` elements are found.  The identity comes first.
    """
    gens = list(gens)
    if not gens:
        return []
    ident = GroupElement.identity(gens[0].degree, gens[0].modulus)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
                    if limit is not None and len(order) >= limit:
                        return order
        frontier = nxt
    return order

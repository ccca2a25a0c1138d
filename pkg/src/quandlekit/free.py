"""The free quandle on ``n`` generators inside the free group.

An element ``s^w`` stands for ``w^-1 s w``.  The conjugator ``w`` is a
freely reduced word of signed letters ``(gen, ±1)``, read left to right, so
``(s^u)^v = s^(uv)``.  Since the centralizer of ``s`` is ``<s>``, stripping
any leading ``s^±1`` from ``w`` gives a normal form.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InputError

Letter = tuple[int, int]


def free_reduce(word: Sequence[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def invert(word: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True, order=True)
class FreeQuandleElement:
    ngens: int
    gen: int
    word: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not 0 <= self.gen < self.ngens:
            raise InputError(f"generator {self.gen} out of range 0..{self.ngens - 1}")
        for g, e in self.word:
            if not 0 <= g < self.ngens or e not in (1, -1):
                raise InputError(f"bad letter {(g, e)}")
        if free_reduce(self.word) != tuple(self.word):
            raise InputError("conjugating word is not freely reduced; use normalize()")
        if self.word and self.word[0][0] == self.gen:
            raise InputError("conjugating word starts with the base generator; use normalize()")

    def __str__(self):
        letters = ", ".join(f"g{g}{'+' if e > 0 else '-'}" for g, e in self.word)
        return f"s{self.gen} ^ [{letters}]"

    def to_json(self):
        return str(self)


def normalize(ngens: int, gen: int, word: Sequence[Letter] = ()) -> FreeQuandleElement:
    word = list(free_reduce([(int(g), int(e)) for g, e in word]))
    start = 0
    while start < len(word) and word[start][0] == gen:
        start += 1
    return FreeQuandleElement(ngens, gen, tuple(word[start:]))


def generator(ngens: int, i: int) -> FreeQuandleElement:
    return FreeQuandleElement(ngens, i, ())


def _check(a: FreeQuandleElement, b: FreeQuandleElement):
    if a.ngens != b.ngens:
        raise InputError("free quandles of different rank")


def fq_right(a: FreeQuandleElement, b: FreeQuandleElement) -> FreeQuandleElement:
    """``a ▷ b``: conjugate ``a`` by the group element ``b = v^-1 t v``."""
    _check(a, b)
    return normalize(a.ngens, a.gen, a.word + invert(b.word) + ((b.gen, 1),) + b.word)


def fq_left(a: FreeQuandleElement, b: FreeQuandleElement) -> FreeQuandleElement:
    _check(a, b)
    return normalize(a.ngens, a.gen, a.word + invert(b.word) + ((b.gen, -1),) + b.word)


def evaluate(a: FreeQuandleElement, images: Sequence, right: Callable, left: Callable):
    """Image of ``a`` under the homomorphism sending generator ``i`` to ``images[i]``."""
    if len(images) != a.ngens:
        raise InputError(f"need {a.ngens} generator images, got {len(images)}")
    value = images[a.gen]
    for g, e in a.word:
        value = right(value, images[g]) if e > 0 else left(value, images[g])
    return value


def as_group_word(a: FreeQuandleElement) -> tuple[Letter, ...]:
    """The reduced free-group word ``w^-1 s w``."""
    return free_reduce(invert(a.word) + ((a.gen, 1),) + a.word)


_TEXT = re.compile(r"^\s*s(\d+)\s*(?:\^\s*\[(.*)\])?\s*$")
_LETTER = re.compile(r"^\s*g(\d+)\s*([+-])\s*$")


def parse(text: str, ngens: int) -> FreeQuandleElement:
    """Parse ``"s2 ^ [g0+, g1-]"`` (the ``^ [...]`` part is optional)."""
    m = _TEXT.match(text)
    if not m:
        raise InputError(f"cannot parse free quandle element {text!r}")
    letters = []
    body = m.group(2)
    if body and body.strip():
        for part in body.split(","):
            lm = _LETTER.match(part)
            if not lm:
                raise InputError(f"bad letter {part!r} in {text!r}")
            letters.append((int(lm.group(1)), 1 if lm.group(2) == "+" else -1))
    return normalize(ngens, int(m.group(1)), letters)


def random_element(rng: random.Random, ngens: int, max_len: int) -> FreeQuandleElement:
    word = [(rng.randrange(ngens), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]
    return normalize(ngens, rng.randrange(ngens), word)

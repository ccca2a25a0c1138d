"""Subquandle closure for any quandle given by its two operations."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .errors import ResourceError


def generated_closure(seeds: Iterable[Hashable], right: Callable, left: Callable,
                      cap: int | None = None) -> set:
    """Smallest set containing ``seeds`` closed under ``right`` and ``left``.

    The generated subquandle is the orbit of the seeds under the maps
    ``- ▷ s`` and ``- ◁ s`` for seeds ``s``, so only seed operands are needed.
    Raises :class:`ResourceError` once more than ``cap`` elements are found.
    """
    seeds = list(dict.fromkeys(seeds))
    seen = set(seeds)
    queue = list(seeds)
    head = 0
    while head < len(queue):
        a = queue[head]
        head += 1
        for s in seeds:
            for op in (right, left):
                b = op(a, s)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
                    if cap is not None and len(seen) > cap:
                        raise ResourceError(f"generated subquandle exceeds {cap} elements")
    return seen

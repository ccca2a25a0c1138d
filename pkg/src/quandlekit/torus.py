"""Dehn quandle of the torus.

Essential curves are slopes ``y/x`` with ``gcd(x, y) = 1``; ``I`` is the
class of contractible curves.  A slope is stored as the pair ``(x, y)``
normalized so that ``x > 0``, or ``(x, y) == (0, 1)``.  The contractible
class is stored as ``(0, 0)``.

The positive twist about ``y/x`` acts on ``H_1`` by the matrix

    M = [[xy + 1, -x^2],
         [y^2,    1 - xy]]

and the quandle operation agrees with conjugation ``M_b^-1 M_a M_b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError, InputError

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))


@dataclass(frozen=True, order=True)
class Slope:
    x: int
    y: int

    def __post_init__(self):
        x, y = self.x, self.y
        if (x, y) == (0, 0):
            return
        if gcd(x, y) != 1:
            raise InputError(f"slope ({x}, {y}) is not primitive")
        if not (x > 0 or (x == 0 and y == 1)):
            raise InputError(f"slope ({x}, {y}) is not sign-normalized; use normalize_slope")

    @property
    def is_contractible(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self):
        return "I" if self.is_contractible else f"{self.y}/{self.x}"

    def __repr__(self):
        return "Slope.I" if self.is_contractible else f"Slope({self.x}, {self.y})"

    def to_json(self):
        return "I" if self.is_contractible else [self.x, self.y]

    @classmethod
    def from_json(cls, data) -> "Slope":
        if data == "I":
            return CONTRACTIBLE
        if isinstance(data, (list, tuple)) and len(data) == 2 and all(
                isinstance(v, int) and not isinstance(v, bool) for v in data):
            return normalize_slope(*data)
        raise InputError(f"a slope is [x, y] or \"I\", got {data!r}")


CONTRACTIBLE = Slope(0, 0)
Slope.I = CONTRACTIBLE


def _sign_normalize(x: int, y: int) -> Slope:
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return Slope(x, y)


def normalize_slope(x: int, y: int) -> Slope:
    """Divide out the gcd and pick the representative with ``x > 0`` (or ``0/1``)."""
    if x == 0 and y == 0:
        raise InputError("(0, 0) is not a slope")
    g = gcd(x, y)
    return _sign_normalize(x // g, y // g)


def _primitive_result(x: int, y: int) -> Slope:
    # the closed-form operations always land on primitive pairs
    if gcd(x, y) != 1:
        raise AssertionError(f"twist formula produced a non-primitive pair ({x}, {y})")
    return _sign_normalize(x, y)


def op_right(a: Slope, b: Slope) -> Slope:
    """``a ▷ b``: the image of ``a`` under the positive twist about ``b``."""
    if a.is_contractible or b.is_contractible:
        return a
    u, v = a.x, a.y
    x, y = b.x, b.y
    return _primitive_result(u - u * x * y + v * x * x, v + v * x * y - u * y * y)


def op_left(a: Slope, b: Slope) -> Slope:
    """``a ◁ b``: inverse of ``op_right`` in its first argument."""
    if a.is_contractible or b.is_contractible:
        return a
    u, v = a.x, a.y
    x, y = b.x, b.y
    return _primitive_result(u + u * x * y - v * x * x, v - v * x * y + u * y * y)


def slope_to_matrix(s: Slope) -> Matrix2:
    if s.is_contractible:
        return IDENTITY
    x, y = s.x, s.y
    return ((x * y + 1, -x * x), (y * y, 1 - x * y))


def matrix_to_slope(m) -> Slope:
    """Recover the slope of a twist matrix; raises DomainError for other matrices."""
    try:
        (a, b), (c, d) = m
        a, b, c, d = (int(v) for v in (a, b, c, d))
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a 2x2 integer matrix: {m!r}") from exc
    if a * d - b * c != 1:
        raise DomainError(f"determinant is {a * d - b * c}, expected 1")
    if a + d != 2:
        raise DomainError(f"trace is {a + d}, expected 2")
    if (a, b, c, d) == (1, 0, 0, 1):
        return CONTRACTIBLE
    if b > 0 or c < 0:
        raise DomainError("off-diagonal entries have the wrong sign for a positive twist")
    x, ay = isqrt(-b), isqrt(c)
    if x * x != -b or ay * ay != c:
        raise DomainError("off-diagonal entries are not (minus) perfect squares")
    xy = a - 1
    y = ay if xy >= 0 else -ay
    if x == 0:
        y = ay
    if x * y != xy or gcd(x, y) != 1:
        raise DomainError(f"matrix {m!r} is not the twist about any slope")
    return _sign_normalize(x, y)


def mat_mul(p, q) -> Matrix2:
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


def mat_inv(m) -> Matrix2:
    """Inverse of a determinant-one integer matrix."""
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise DomainError("matrix is not in SL(2, Z)")
    return ((d, -b), (-c, a))


def conjugation_oracle(a: Slope, b: Slope) -> Slope:
    """``a ▷ b`` computed as the slope of ``M_b^-1 M_a M_b``.

    Meant for cross-checking :func:`op_right`, not as the main path.
    """
    mb = slope_to_matrix(b)
    return matrix_to_slope(mat_mul(mat_mul(mat_inv(mb), slope_to_matrix(a)), mb))


def act(s: Slope, m) -> Slope:
    """Right action of ``SL(2, Z)`` on slopes: the curve ``M^-1 (x, y)``.

    Chosen so that ``act(a, slope_to_matrix(b)) == op_right(a, b)`` and
    ``slope_to_matrix(act(s, M)) == M^-1 slope_to_matrix(s) M``.
    """
    if s.is_contractible:
        return s
    (a, b), (c, d) = mat_inv(m)
    return _primitive_result(a * s.x + b * s.y, c * s.x + d * s.y)


def slopes_in_box(bound: int, include_contractible: bool = True) -> list[Slope]:
    """All normalized slopes with ``|x|, |y| <= bound``."""
    out = [CONTRACTIBLE] if include_contractible else []
    for x in range(0, bound + 1):
        for y in range(-bound, bound + 1):
            if gcd(x, y) == 1 and (x > 0 or y == 1):
                out.append(Slope(x, y))
    return out

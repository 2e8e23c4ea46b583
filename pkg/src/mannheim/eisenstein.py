"""Exact arithmetic in Z[w], where w is a root of w^2 = w - 1.

Elements are stored as the coefficient pair ``(x, y)`` of ``x + y*w``.
The conjugate of w is ``wbar = 1 - w``; it satisfies ``w * wbar = 1`` and
``w + wbar = 1``.  The norm form is ``x^2 + x*y + y^2``.

Coefficients are plain Python ints, but every result is range-checked
against the signed 64-bit window so that values which would wrap in a
fixed-width implementation raise :class:`OverflowError` instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _checked(v: int) -> int:
    if v < INT64_MIN or v > INT64_MAX:
        raise OverflowError(f"coefficient {v} does not fit in a signed 64-bit integer")
    return v


@dataclass(frozen=True, order=True)
class EisensteinInt:
    """The ring element ``x + y*w``."""

    x: int
    y: int

    def __post_init__(self):
        _checked(self.x)
        _checked(self.y)

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(_checked(self.x + other.x), _checked(self.y + other.y))

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(_checked(self.x - other.x), _checked(self.y - other.y))

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(_checked(-self.x), _checked(-self.y))

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = w - 1
        a, b, c, d = self.x, self.y, other.x, other.y
        bd = _checked(b * d)
        return EisensteinInt(
            _checked(_checked(a * c) - bd),
            _checked(_checked(a * d) + _checked(b * c) + bd),
        )

    def conj(self) -> EisensteinInt:
        return EisensteinInt(_checked(self.x + self.y), _checked(-self.y))

    def norm(self) -> int:
        x, y = self.x, self.y
        return _checked(_checked(x * x) + _checked(x * y) + _checked(y * y))

    def wbar_coords(self) -> tuple[int, int]:
        """Coordinates ``(x', y')`` with ``x + y*w == x' + y'*wbar``."""
        return self.x + self.y, -self.y

    def __str__(self) -> str:
        return render(self)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
W = EisensteinInt(0, 1)
WBAR = EisensteinInt(1, -1)

# Canonical order +1, -1, +w, -w, +wbar, -wbar.  Report layouts and BFS
# neighbour order depend on it.
UNITS: tuple[EisensteinInt, ...] = (ONE, -ONE, W, -W, WBAR, -WBAR)


def eis_add(a: EisensteinInt, b: EisensteinInt) -> EisensteinInt:
    return a + b


def eis_mul(a: EisensteinInt, b: EisensteinInt) -> EisensteinInt:
    return a * b


def eis_conj(a: EisensteinInt) -> EisensteinInt:
    return a.conj()


def eis_norm(a: EisensteinInt) -> int:
    return a.norm()


def wbar_coords(a: EisensteinInt) -> tuple[int, int]:
    return a.wbar_coords()


def from_wbar_coords(xp: int, yp: int) -> EisensteinInt:
    """Inverse of :func:`wbar_coords`: build ``xp + yp*wbar``."""
    return EisensteinInt(xp, 0) + EisensteinInt(yp, 0) * WBAR


def unit_set() -> tuple[EisensteinInt, ...]:
    return UNITS


def unit_difference_norms() -> set[int]:
    """Norms of ``e1 - e2`` over all unordered pairs of distinct units.

    The result is ``{1, 3, 4}``; the norm form never takes the value 2.
    """
    return {(a - b).norm() for a, b in combinations(UNITS, 2)}


def render(a: EisensteinInt) -> str:
    """Text form with explicit signs: ``"0"``, ``"-w"``, ``"-7+7w"``, ``"2-8w"``."""
    x, y = a.x, a.y
    if y == 0:
        return str(x)
    if y == 1:
        ypart = "w"
    elif y == -1:
        ypart = "-w"
    else:
        ypart = f"{y}w"
    if x == 0:
        return ypart
    if not ypart.startswith("-"):
        ypart = "+" + ypart
    return f"{x}{ypart}"


_TERM = re.compile(r"([+-]?)(\d*)(w?)")


def parse(text: str) -> EisensteinInt:
    """Parse the output of :func:`render` (whitespace is ignored)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty ring element")
    x = y = 0
    seen_x = seen_y = False
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, var = m.groups()
        if m.end() == pos or (not digits and not var):
            raise ValueError(f"cannot parse ring element {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign before term in {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if var:
            if seen_y:
                raise ValueError(f"repeated w term in {text!r}")
            y, seen_y = coeff, True
        else:
            if seen_x:
                raise ValueError(f"repeated constant term in {text!r}")
            x, seen_x = coeff, True
        pos = m.end()
    return EisensteinInt(x, y)

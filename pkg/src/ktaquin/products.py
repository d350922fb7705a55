"""Non-associative tableau products built on rectification of corner-to-corner shapes."""

from __future__ import annotations

from .shapes import star
from .tableaux import IncreasingTableau, TableauError, row_reading_word
from .jdt import krect


def _star_tableau(t: IncreasingTableau, u: IncreasingTableau) -> IncreasingTableau:
    """Arrange t southwest and u northeast, corner to corner."""
    shape = star(t.outer, u.outer)
    width = t.outer[0] if t.outer else 0
    drop = len(u.outer)
    cells = [(r + drop, c, v) for r, c, v in t.cells]
    cells += [(r, c + width, v) for r, c, v in u.cells]
    return IncreasingTableau(shape.outer, shape.inner, tuple(cells))


def odot(t: IncreasingTableau, u: IncreasingTableau) -> IncreasingTableau:
    """Rectify t and u placed corner to corner; well defined, not associative."""
    if not t.is_straight or not u.is_straight:
        raise TableauError("both factors must be straight tableaux")
    return krect(_star_tableau(t, u))


def single_box(x: int) -> IncreasingTableau:
    return IncreasingTableau((1,), (), ((1, 1, x),))


def hecke_insert(z: IncreasingTableau, x: int) -> IncreasingTableau:
    """Insert one letter by rectifying with a single northeast box."""
    if not z.is_straight:
        raise TableauError("insertion target must be a straight tableau")
    if x < 1:
        raise ValueError("inserted letter must be a positive integer")
    return odot(z, single_box(x))


def diamond(z: IncreasingTableau, w: IncreasingTableau) -> IncreasingTableau:
    """Insert w letter by letter along its row reading word."""
    if not z.is_straight or not w.is_straight:
        raise TableauError("both factors must be straight tableaux")
    out = z
    for letter in row_reading_word(w):
        out = hecke_insert(out, letter)
    return out

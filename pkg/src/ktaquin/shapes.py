"""Integer partitions, skew shapes, ambient rectangles, and derived shape constructions.

Partitions are plain tuples of weakly decreasing positive integers, stored without
trailing zeros so there is a single canonical form.  Boxes are 1-based
(row, column) matrix coordinates, row 1 at the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Part = tuple[int, ...]
Box = tuple[int, int]


class ShapeFitError(ValueError):
    """A shape violates a containment or validity precondition."""


def partition(parts: Iterable[int]) -> Part:
    """Normalize an iterable of row lengths into a canonical partition tuple.

    Trailing zeros are dropped; anything not weakly decreasing or negative is
    rejected.
    """
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for a, b in zip(t, t[1:]):
        if b > a:
            raise ShapeFitError(f"rows must be weakly decreasing: {t}")
    if t and t[-1] < 0:
        raise ShapeFitError(f"rows must be nonnegative: {t}")
    return t


def psize(lam: Part) -> int:
    return sum(lam)


def contains(outer: Part, inner: Part) -> bool:
    """Componentwise containment, padding with zeros."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(lam: Part) -> Part:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def row_length(lam: Part, r: int) -> int:
    """Length of row r (1-based), zero beyond the last row."""
    return lam[r - 1] if 1 <= r <= len(lam) else 0


def boxes_of(lam: Part) -> list[Box]:
    return [(r, c) for r, width in enumerate(lam, start=1) for c in range(1, width + 1)]


def removable_corners(lam: Part) -> list[Box]:
    """Boxes (r, c) of lam with no box below or to the right (maximally southeast)."""
    out = []
    for r, width in enumerate(lam, start=1):
        if width > 0 and row_length(lam, r + 1) < width:
            out.append((r, width))
    return out


def addable_corners(lam: Part, max_rows: int | None = None, max_cols: int | None = None) -> list[Box]:
    """Boxes that can be appended to lam keeping a Young diagram, within bounds."""
    out = []
    last_row = len(lam) + 1 if max_rows is None else min(len(lam) + 1, max_rows)
    for r in range(1, last_row + 1):
        c = row_length(lam, r) + 1
        if max_cols is not None and c > max_cols:
            continue
        if r == 1 or row_length(lam, r - 1) >= c:
            out.append((r, c))
    return out


def remove_boxes(lam: Part, boxes: Iterable[Box]) -> Part:
    """Remove a set of removable corners (distinct rows) from a partition."""
    rows = list(lam)
    seen_rows = set()
    for r, c in boxes:
        if r in seen_rows:
            raise ShapeFitError(f"two removed boxes share row {r}")
        seen_rows.add(r)
        if not (1 <= r <= len(rows)) or rows[r - 1] != c:
            raise ShapeFitError(f"box {(r, c)} is not a removable corner of {lam}")
        rows[r - 1] -= 1
    return partition(rows)


def add_boxes(lam: Part, boxes: Iterable[Box]) -> Part:
    """Add a set of addable corners (distinct rows) to a partition."""
    rows = list(lam)
    seen_rows = set()
    for r, c in sorted(boxes):
        if r in seen_rows:
            raise ShapeFitError(f"two added boxes share row {r}")
        seen_rows.add(r)
        while len(rows) < r:
            rows.append(0)
        if rows[r - 1] + 1 != c:
            raise ShapeFitError(f"box {(r, c)} is not addable to {lam}")
        rows[r - 1] += 1
    return partition(rows)


def partitions_in_rectangle(rows: int, cols: int) -> Iterator[Part]:
    """All partitions fitting a rows x cols rectangle, lexicographically descending per row."""

    def rec(prev: int, left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if left == 0:
            return
        for first in range(min(prev, cols), 0, -1):
            for rest in rec(first, left - 1):
                yield (first,) + rest

    yield from rec(cols, rows)


def partitions_of(n: int, max_rows: int | None = None, max_cols: int | None = None) -> Iterator[Part]:
    """All partitions of n, optionally bounded, in lexicographically descending order."""

    def rec(remaining: int, prev: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(prev, remaining), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    cap = n if max_cols is None else min(n, max_cols)
    yield from rec(n, cap, n if max_rows is None else max_rows)


@dataclass(frozen=True)
class AmbientRectangle:
    """The k x (n-k) rectangle every diagram of a Grassmannian sits in."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not (0 < self.k < self.n):
            raise ShapeFitError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k

    def fits(self, lam: Part) -> bool:
        return len(lam) <= self.rows and (not lam or lam[0] <= self.cols)

    def require_fit(self, lam: Part) -> None:
        if not self.fits(lam):
            raise ShapeFitError(f"{lam} does not fit the {self.rows}x{self.cols} rectangle")

    @property
    def full(self) -> Part:
        return (self.cols,) * self.rows


@dataclass(frozen=True)
class SkewShape:
    """A skew region outer/inner with inner contained in outer."""

    outer: Part
    inner: Part

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ShapeFitError(f"inner {self.inner} not contained in outer {self.outer}")

    @classmethod
    def straight(cls, lam: Iterable[int]) -> "SkewShape":
        return cls(partition(lam), ())

    @property
    def size(self) -> int:
        return psize(self.outer) - psize(self.inner)

    @property
    def is_straight(self) -> bool:
        return self.inner == ()

    def boxes(self) -> list[Box]:
        """Region boxes in row-major order."""
        out = []
        for r, width in enumerate(self.outer, start=1):
            for c in range(row_length(self.inner, r) + 1, width + 1):
                out.append((r, c))
        return out

    def __contains__(self, box: Box) -> bool:
        r, c = box
        return 1 <= r <= len(self.outer) and row_length(self.inner, r) < c <= self.outer[r - 1]


def inner_corners(shape: SkewShape) -> frozenset[Box]:
    """Maximally-southeast boxes of the inner partition (slide entry points)."""
    return frozenset(removable_corners(shape.inner))


def outer_corners(shape: SkewShape, ambient: AmbientRectangle) -> frozenset[Box]:
    """Boxes addable to the outer partition inside the ambient rectangle."""
    ambient.require_fit(shape.outer)
    return frozenset(addable_corners(shape.outer, max_rows=ambient.rows, max_cols=ambient.cols))


@dataclass(frozen=True)
class DirectSumFrame:
    """Two Grassmannian factors (k1, n1), (k2, n2) and the ambient they sum into."""

    k1: int
    n1: int
    k2: int
    n2: int

    def __post_init__(self) -> None:
        if not (0 < self.k1 < self.n1 and 0 < self.k2 < self.n2):
            raise ShapeFitError(f"need 0 < k1 < n1 and 0 < k2 < n2, got {self}")

    @property
    def k(self) -> int:
        return self.k1 + self.k2

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def ambient(self) -> AmbientRectangle:
        return AmbientRectangle(self.k, self.n)

    @property
    def first_rect(self) -> AmbientRectangle:
        return AmbientRectangle(self.k1, self.n1)

    @property
    def second_rect(self) -> AmbientRectangle:
        return AmbientRectangle(self.k2, self.n2)

    def require_fits(self, lam: Part, mu: Part, nu: Part | None = None) -> None:
        self.first_rect.require_fit(lam)
        self.second_rect.require_fit(mu)
        if nu is not None:
            self.ambient.require_fit(nu)


def dual_in_rectangle(lam: Part, rect: AmbientRectangle) -> Part:
    """180-degree rotation of the complement of lam in the rectangle; an involution."""
    rect.require_fit(lam)
    padded = list(lam) + [0] * (rect.rows - len(lam))
    return partition(rect.cols - padded[rect.rows - i] for i in range(1, rect.rows + 1))


def star(lam: Part, mu: Part) -> SkewShape:
    """lam and mu corner to corner, lam southwest; the inner shape is a rectangle."""
    lam, mu = partition(lam), partition(mu)
    width = lam[0] if lam else 0
    outer = tuple(width + m for m in mu) + lam
    inner = (width,) * len(mu)
    return SkewShape(partition(outer), partition(inner))


def omega(frame: DirectSumFrame) -> Part:
    """The ambient rectangle with its southeast k2 x (n1-k1) subrectangle removed."""
    cols = frame.n - frame.k
    return partition((cols,) * frame.k1 + (frame.n2 - frame.k2,) * frame.k2)


def omega_dual(frame: DirectSumFrame) -> Part:
    """Dual of omega in the ambient rectangle: the k2 x (n1-k1) rectangle."""
    return partition(((frame.n1 - frame.k1),) * frame.k2)


def dagger(lam: Part, mu: Part, frame: DirectSumFrame) -> Part:
    """mu to the right of, and lam below, the k2 x (n1-k1) rectangle."""
    lam, mu = partition(lam), partition(mu)
    frame.require_fits(lam, mu)
    base = frame.n1 - frame.k1
    rows = tuple(base + row_length(mu, i) for i in range(1, frame.k2 + 1)) + lam
    result = partition(rows)
    frame.ambient.require_fit(result)
    return result


def oslash(mu: Part, lam: Part, frame: DirectSumFrame) -> Part:
    """lam to the right of the k1 x (n2-k2) rectangle, mu below it."""
    lam, mu = partition(lam), partition(mu)
    frame.require_fits(lam, mu)
    base = frame.n2 - frame.k2
    rows = tuple(base + row_length(lam, i) for i in range(1, frame.k1 + 1)) + mu
    result = partition(rows)
    frame.ambient.require_fit(result)
    return result


@lru_cache(maxsize=None)
def rook_strip_contractions(nu: Part) -> tuple[Part, ...]:
    """All nubar inside nu such that nu/nubar has no two boxes in a shared row or column.

    Includes nubar = nu.  Each candidate removes at most one box per row (the
    row's last box), so it is enough to scan subsets of rows and reject removed
    boxes landing in the same column.
    """
    nu = partition(nu)
    out = []
    nrows = len(nu)
    for mask in range(1 << nrows):
        rows = list(nu)
        cols = []
        ok = True
        for i in range(nrows):
            if mask >> i & 1:
                cols.append(nu[i])
                rows[i] -= 1
        if len(set(cols)) != len(cols):
            continue
        for a, b in zip(rows, rows[1:]):
            if b > a:
                ok = False
                break
        if ok:
            out.append(partition(rows))
    return tuple(sorted(set(out), reverse=True))


def boundary_word(lam: Part, rect: AmbientRectangle) -> frozenset[int]:
    """Positions of the down steps when walking the boundary of lam from NE to SW."""
    rect.require_fit(lam)
    return frozenset(rect.cols - row_length(lam, t) + t for t in range(1, rect.rows + 1))


def partition_from_boundary_word(word: frozenset[int] | Iterable[int], rect: AmbientRectangle) -> Part:
    """Inverse of boundary_word."""
    chosen = sorted(set(word))
    if len(chosen) != rect.rows or any(not (1 <= w <= rect.n) for w in chosen):
        raise ShapeFitError(f"{chosen} is not a {rect.rows}-subset of 1..{rect.n}")
    rows = [rect.cols - w + t for t, w in enumerate(chosen, start=1)]
    lam = partition(rows)
    rect.require_fit(lam)
    return lam


def format_partition(lam: Part) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Part:
    """Parse '[4,3,1]' (brackets optional); '[]' is the empty partition."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    try:
        parts = tuple(int(tok) for tok in s.split(","))
    except ValueError as exc:
        raise ShapeFitError(f"cannot parse partition from {text!r}") from exc
    return partition(parts)

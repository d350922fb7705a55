"""Shared deterministic generators for randomized property sweeps."""

import random

from ktaquin.shapes import SkewShape, partition
from ktaquin.tableaux import IncreasingTableau


def random_partition(rng: random.Random, max_rows: int, max_cols: int, allow_empty: bool = True):
    rows = rng.randint(0 if allow_empty else 1, max_rows)
    parts = []
    width = rng.randint(1, max_cols) if rows else 0
    for _ in range(rows):
        parts.append(width)
        width = rng.randint(1, width) if width > 1 and rng.random() < 0.6 else width
    return partition(sorted(parts, reverse=True))


def random_skew(rng: random.Random, max_size: int) -> SkewShape:
    while True:
        outer = random_partition(rng, 4, 4, allow_empty=False)
        inner_candidates = [
            lam
            for lam in _subdiagrams(outer)
            if 0 < sum(outer) - sum(lam) <= max_size
        ]
        if inner_candidates:
            return SkewShape(outer, rng.choice(inner_candidates))


def _subdiagrams(outer):
    if not outer:
        return [()]
    out = set()

    def rec(prefix, row):
        if row == len(outer):
            out.add(partition(prefix))
            return
        cap = min(outer[row], prefix[-1] if prefix else outer[0])
        for w in range(cap + 1):
            rec(prefix + [w], row + 1)

    rec([], 0)
    return sorted(out)


def random_increasing(rng: random.Random, shape: SkewShape, slack: int = 2) -> IncreasingTableau:
    """Fill the shape box by box with bounded random gaps."""
    entries = {}
    for r, c in shape.boxes():
        lo = max(entries.get((r, c - 1), 0), entries.get((r - 1, c), 0))
        entries[(r, c)] = lo + rng.randint(1, slack)
    return IncreasingTableau.make(shape.outer, shape.inner, entries)

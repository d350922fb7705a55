"""Shape constructions against worked values and brute-force oracles."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ktaquin.shapes import (
    AmbientRectangle,
    DirectSumFrame,
    ShapeFitError,
    SkewShape,
    addable_corners,
    boundary_word,
    contains,
    dagger,
    dual_in_rectangle,
    format_partition,
    inner_corners,
    omega,
    omega_dual,
    oslash,
    outer_corners,
    parse_partition,
    partition,
    partition_from_boundary_word,
    partitions_in_rectangle,
    partitions_of,
    psize,
    removable_corners,
    rook_strip_contractions,
    star,
)

partitions_small = st.builds(
    lambda rows: partition(sorted(rows, reverse=True)),
    st.lists(st.integers(min_value=1, max_value=6), max_size=5),
)


def brute_rook_strip_contractions(nu):
    """All sub-partitions whose complement is a rook strip, by raw subset scan."""
    boxes = [(r, c) for r, w in enumerate(nu, start=1) for c in range(1, w + 1)]
    found = set()
    for size in range(len(boxes) + 1):
        for removed in itertools.combinations(boxes, size):
            rows = [r for r, _ in removed]
            cols = [c for _, c in removed]
            if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
                continue
            kept = set(boxes) - set(removed)
            counts = [sum(1 for (r, c) in kept if r == i) for i in range(1, len(nu) + 1)]
            if any(b > a for a, b in zip(counts, counts[1:])):
                continue
            if any((r, c) in kept and (r, c - 1) not in kept for (r, c) in boxes if c > 1 and (r, c) in kept):
                continue
            # kept must be left-justified rows
            ok = all(
                {(i, c) for c in range(1, counts[i - 1] + 1)} == {(r, c) for (r, c) in kept if r == i}
                for i in range(1, len(nu) + 1)
            )
            if ok:
                found.add(partition(counts))
    return found


class TestPartitionBasics:
    def test_normalization(self):
        assert partition([3, 2, 0, 0]) == (3, 2)
        assert partition([]) == ()
        with pytest.raises(ShapeFitError):
            partition([1, 2])

    def test_text_round_trip(self):
        assert parse_partition("[4,3,1]") == (4, 3, 1)
        assert parse_partition("[]") == ()
        assert parse_partition("2,1") == (2, 1)
        assert format_partition((4, 3, 1)) == "[4,3,1]"
        assert format_partition(()) == "[]"

    def test_partitions_in_rectangle_count(self):
        # binomial(rows+cols, rows) shapes fit a rows x cols box
        assert len(list(partitions_in_rectangle(2, 2))) == 6
        assert len(list(partitions_in_rectangle(3, 3))) == 20
        assert len(set(partitions_in_rectangle(4, 4))) == 70

    def test_partitions_of(self):
        assert set(partitions_of(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


class TestDual:
    def test_worked_values(self):
        assert dual_in_rectangle((2, 1), AmbientRectangle(3, 6)) == (3, 2, 1)
        assert dual_in_rectangle((), AmbientRectangle(2, 5)) == (3, 3)
        assert dual_in_rectangle((3, 1), AmbientRectangle(3, 7)) == (4, 3, 1)

    def test_fit_error(self):
        with pytest.raises(ShapeFitError):
            dual_in_rectangle((4,), AmbientRectangle(2, 5))

    @given(partitions_small)
    @settings(max_examples=100)
    def test_involution(self, lam):
        rows = max(len(lam), 1) + 1
        cols = max(psize(lam) and lam[0], 1) + 1
        rect = AmbientRectangle(rows, rows + cols)
        assert dual_in_rectangle(dual_in_rectangle(lam, rect), rect) == lam


class TestStar:
    def test_worked_example(self):
        s = star((4, 3, 1), (3, 2))
        assert s.outer == (7, 6, 4, 3, 1)
        assert s.inner == (4, 4)

    def test_empty_cases(self):
        assert star((), (2, 1)) == SkewShape((2, 1), ())
        assert star((3, 1), ()) == SkewShape((3, 1), ())

    def test_fifteen_tableaux_shape(self):
        s = star((2,), (2, 1))
        assert s.outer == (4, 3, 2)
        assert s.inner == (2, 2)

    @given(partitions_small, partitions_small)
    @settings(max_examples=100)
    def test_inner_is_rectangle(self, lam, mu):
        s = star(lam, mu)
        assert s.inner == ((lam[0],) * len(mu) if lam and mu else ())
        assert s.size == psize(lam) + psize(mu)


class TestFrameShapes:
    def test_dagger_values(self):
        f = DirectSumFrame(1, 3, 2, 4)
        assert dagger((2,), (2, 1), f) == (4, 3, 2)
        assert dagger((), (), f) == (2, 2)  # the omega-dual rectangle itself
        assert dagger((1, 1), (2,), DirectSumFrame(2, 4, 1, 3)) == (4, 1, 1)

    def test_oslash_values(self):
        f = DirectSumFrame(1, 3, 2, 4)
        assert oslash((2, 1), (2,), f) == (4, 2, 1)
        assert oslash((), (), f) == (2,)  # the k1 x (n2-k2) rectangle
        assert oslash((1,), (2, 1), DirectSumFrame(2, 4, 1, 3)) == (4, 3, 1)

    def test_omega_values(self):
        assert omega(DirectSumFrame(1, 3, 2, 4)) == (4, 2, 2)
        assert omega(DirectSumFrame(1, 2, 1, 2)) == (2, 1)

    def test_omega_dual_relation(self):
        for frame in (DirectSumFrame(1, 3, 2, 4), DirectSumFrame(1, 2, 1, 2), DirectSumFrame(2, 4, 2, 3)):
            assert omega_dual(frame) == dual_in_rectangle(omega(frame), frame.ambient)
        assert omega_dual(DirectSumFrame(1, 3, 2, 4)) == (2, 2)

    def test_dagger_size_bookkeeping(self):
        for k1, n1, k2, n2 in [(1, 3, 2, 4), (2, 4, 1, 3), (2, 3, 2, 4)]:
            f = DirectSumFrame(k1, n1, k2, n2)
            for lam in partitions_in_rectangle(f.k1, f.n1 - f.k1):
                for mu in partitions_in_rectangle(f.k2, f.n2 - f.k2):
                    assert psize(dagger(lam, mu, f)) == psize(omega_dual(f)) + psize(lam) + psize(mu)

    def test_fit_errors(self):
        f = DirectSumFrame(1, 2, 1, 2)
        with pytest.raises(ShapeFitError):
            dagger((2,), (), f)
        with pytest.raises(ShapeFitError):
            oslash((), (1, 1), f)


class TestRookStrips:
    def test_worked_values(self):
        assert set(rook_strip_contractions((2, 1))) == {(2, 1), (2,), (1, 1), (1,)}
        assert set(rook_strip_contractions((1,))) == {(1,), ()}
        # removing (1,2) and (2,2) shares a column, so (1,1) is not reachable
        assert set(rook_strip_contractions((2, 2))) == {(2, 2), (2, 1)}

    def test_against_brute_force(self):
        for n in range(9):
            for nu in partitions_of(n):
                assert set(rook_strip_contractions(nu)) == brute_rook_strip_contractions(nu), nu


class TestBoundaryWord:
    def test_worked_values(self):
        assert boundary_word((3, 3), AmbientRectangle(2, 5)) == frozenset({1, 2})
        assert boundary_word((), AmbientRectangle(2, 5)) == frozenset({4, 5})
        assert boundary_word((1,), AmbientRectangle(1, 2)) == frozenset({1})

    def test_bijection(self):
        rect = AmbientRectangle(3, 7)
        seen = set()
        for lam in partitions_in_rectangle(rect.rows, rect.cols):
            w = boundary_word(lam, rect)
            assert partition_from_boundary_word(w, rect) == lam
            seen.add(w)
        assert len(seen) == 35  # binomial(7, 3)


class TestCorners:
    def test_inner_corners(self):
        assert inner_corners(SkewShape((3, 3), (2, 1))) == frozenset({(1, 2), (2, 1)})
        assert inner_corners(SkewShape((3, 3), (2, 2))) == frozenset({(2, 2)})

    def test_outer_corners(self):
        shape = SkewShape((2, 1), ())
        assert outer_corners(shape, AmbientRectangle(3, 6)) == frozenset({(1, 3), (2, 2), (3, 1)})

    def test_corner_helpers(self):
        assert removable_corners((5, 3, 2)) == [(1, 5), (2, 3), (3, 2)]
        assert addable_corners((2, 2), max_rows=2, max_cols=3) == [(1, 3)]

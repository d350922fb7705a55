"""Executable verification of the structural slide theorems and their sharpness.

Checks here are pure jobs returning report objects that serialize to JSON as
{check, instance, verdict, witness}.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .shapes import (
    AmbientRectangle,
    Box,
    Part,
    ShapeFitError,
    SkewShape,
    addable_corners,
    partition,
    psize,
    removable_corners,
)
from .tableaux import IncreasingTableau, enumerate_increasing, is_superstandard, superstandard
from .jdt import (
    SlideStep,
    SwitchTrace,
    kinfusion,
    krect,
    rectification_orders,
    switch_trace,
)


@dataclass(frozen=True)
class Report:
    check: str
    instance: str
    verdict: str
    witness: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "check": self.check,
                "instance": self.instance,
                "verdict": self.verdict,
                "witness": self.witness,
            },
            sort_keys=True,
            default=_jsonable,
        )


def _jsonable(obj):
    if isinstance(obj, (frozenset, set, tuple)):
        return sorted(obj) if isinstance(obj, (frozenset, set)) else list(obj)
    if isinstance(obj, IncreasingTableau):
        return {"outer": list(obj.outer), "inner": list(obj.inner), "cells": [list(c) for c in obj.cells]}
    raise TypeError(f"cannot serialize {type(obj)}")


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    divergence_stage: int | None  # global switch-state index of the first mismatch
    stages_compared: int

    def report(self, instance: str) -> Report:
        verdict = "equivalent-on-sequence" if self.equivalent else f"divergent-at-stage {self.divergence_stage}"
        return Report("strong-dual-equivalence", instance, verdict, {"stages": self.stages_compared})


def check_strong_dual_equivalence(
    a: IncreasingTableau,
    b: IncreasingTableau,
    slides: Sequence[SlideStep],
    ambient: AmbientRectangle,
) -> EquivalenceVerdict:
    """Compare the switch-by-switch configurations of a common slide sequence."""
    if a.shape != b.shape:
        raise ShapeFitError("tableaux must share one shape")
    trace_a = switch_trace(a, slides, ambient)
    trace_b = switch_trace(b, slides, ambient)
    confs_a = [s.configuration() for s in trace_a.states]
    confs_b = [s.configuration() for s in trace_b.states]
    n = min(len(confs_a), len(confs_b))
    for i in range(n):
        if confs_a[i] != confs_b[i]:
            return EquivalenceVerdict(False, i, i + 1)
    if len(confs_a) != len(confs_b):
        return EquivalenceVerdict(False, n, n)
    return EquivalenceVerdict(True, None, len(confs_a))


@dataclass(frozen=True)
class OriginViolation:
    stage: int
    kind: str  # "uniformity" | "row-order" | "column-order" | "bullet-neighbors"
    detail: str


@dataclass(frozen=True)
class OriginReport:
    violations: tuple[OriginViolation, ...]
    stages_checked: int

    @property
    def clean(self) -> bool:
        return not self.violations

    def report(self, instance: str) -> Report:
        verdict = "clean" if self.clean else "violations"
        return Report(
            "origin-invariants",
            instance,
            verdict,
            {"stages": self.stages_checked, "violations": [v.__dict__ for v in self.violations]},
        )


def _nw_comparable(x: Box, y: Box) -> bool:
    return (x[0] <= y[0] and x[1] <= y[1]) or (y[0] <= x[0] and y[1] <= x[1])


def verify_origin_invariants(trace: SwitchTrace) -> OriginReport:
    """Per-stage checks: uniformity, origin-row/column order, bullet-neighbor comparability."""
    violations: list[OriginViolation] = []
    for i, state in enumerate(trace.states):
        if not trace.uniform_flags[i]:
            violations.append(OriginViolation(i, "uniformity", f"switch into stage {state.stage}"))
        origins = trace.origins[i]
        if origins is None:
            continue
        entries = state.entries()
        boxes = sorted(entries)
        for x in boxes:
            ox = origins[x]
            for y in boxes:
                if x == y:
                    continue
                oy = origins[y]
                if ox[0] == oy[0] and oy[1] > ox[1]:
                    if not (y[1] > x[1] and y[0] <= x[0]):
                        violations.append(
                            OriginViolation(i, "row-order", f"origins {ox},{oy} boxes {x},{y}")
                        )
                if ox[1] == oy[1] and oy[0] > ox[0]:
                    if not (y[0] > x[0] and y[1] <= x[1]):
                        violations.append(
                            OriginViolation(i, "column-order", f"origins {ox},{oy} boxes {x},{y}")
                        )
        for (r, c) in state.bullets:
            north, west = (r - 1, c), (r, c - 1)
            if north in entries and west in entries:
                if not _nw_comparable(origins[north], origins[west]):
                    violations.append(
                        OriginViolation(
                            i,
                            "bullet-neighbors",
                            f"bullet {(r, c)} neighbors originate at {origins[north]}, {origins[west]}",
                        )
                    )
    return OriginReport(tuple(violations), len(trace.states))


@dataclass(frozen=True)
class Counterexample:
    """A shape, filling, and two rectification orders with different results."""

    nu: Part
    tableau: IncreasingTableau
    order1: IncreasingTableau
    order2: IncreasingTableau
    results: tuple[IncreasingTableau, IncreasingTableau]

    def report(self) -> Report:
        return Report(
            "rectification-sharpness",
            f"inner {self.tableau.inner}",
            "divergent",
            {
                "nu": list(self.nu),
                "tableau": self.tableau,
                "order1": self.order1,
                "order2": self.order2,
                "results": list(self.results),
            },
        )


def is_rectangle(lam: Part) -> bool:
    return not lam or all(p == lam[0] for p in lam)


def _seed_instance(lam: Part) -> tuple[Part, dict[Box, int]] | None:
    """The spread-out seed at the first descent; None when it does not fit."""
    ell = len(lam)
    r = next((i for i in range(2, ell + 1) if lam[i - 2] > lam[i - 1]), None)
    if r is None:
        return None
    entries: dict[Box, int] = {(1, lam[0] + 1): 2, (r, lam[r - 1] + 1): 1, (r, lam[r - 1] + 2): 4}
    rows = list(lam)
    rows[0] += 1
    rows[r - 1] += 2
    if r == ell:
        rows.append(2)
        entries[(ell + 1, 1)] = 1
        entries[(ell + 1, 2)] = 3
    else:
        rows[r] += 1
        entries[(r + 1, lam[r] + 1)] = 3
        rows.append(1)
        entries[(ell + 1, 1)] = 1
    for a, b in zip(rows, rows[1:]):
        if b > a:
            return None
    return partition(rows), entries


def _search_candidates(lam: Part) -> Iterator[tuple[Part, dict[Box, int]]]:
    """Deterministic bounded search: shapes with one extra row/column, small fillings."""
    from .tableaux import iter_increasing_cells

    ell, width = len(lam), lam[0]
    shapes = []
    for nu in _partitions_over(lam, max_rows=ell + 1, max_cols=width + 1):
        extra = psize(nu) - psize(lam)
        if 2 <= extra <= 6:
            shapes.append(nu)
    shapes.sort(key=lambda nu: (psize(nu), nu))
    for nu in shapes:
        for m in range(2, min(4, psize(nu) - psize(lam)) + 1):
            for cells in iter_increasing_cells(nu, lam, range(1, m + 1), surjective=True):
                yield nu, {(r, c): v for r, c, v in cells}


def _partitions_over(lam: Part, max_rows: int, max_cols: int) -> Iterator[Part]:
    def rec(prefix: list[int], row: int) -> Iterator[Part]:
        if row == max_rows:
            yield partition(prefix)
            return
        lo = lam[row] if row < len(lam) else 0
        hi = min(prefix[-1] if prefix else max_cols, max_cols)
        for w in range(hi, lo - 1, -1):
            yield from rec(prefix + [w], row + 1)

    yield from rec([], 0)


def nonrect_counterexample(lam: Part) -> Counterexample:
    """For a non-rectangular inner shape, exhibit order-dependent rectification.

    The canonical spread-out seed at the first descent is tried first; if its
    shape does not fit or (never observed) fails to diverge, a deterministic
    bounded search over shapes with at most one extra row and column runs.
    Every returned instance is verified divergent.
    """
    lam = partition(lam)
    if is_rectangle(lam):
        raise ShapeFitError(f"{lam} is a rectangle; rectification there is order independent")

    def candidates() -> Iterator[tuple[Part, dict[Box, int]]]:
        seed = _seed_instance(lam)
        if seed is not None:
            yield seed
        yield from _search_candidates(lam)

    from .tableaux import column_superstandard

    def order_stream() -> Iterator[IncreasingTableau]:
        # the row- and column-consecutive orders split at the descent corner,
        # which is exactly the seed's divergence mechanism; fall back to the
        # full canonical order set for searched instances
        yield superstandard(lam)
        yield column_superstandard(lam)
        yield from rectification_orders(lam)

    for nu, entries in candidates():
        t = IncreasingTableau.make(nu, lam, entries)
        first_order: IncreasingTableau | None = None
        first_result: IncreasingTableau | None = None
        for order in order_stream():
            result = krect(t, order)
            if first_order is None:
                first_order, first_result = order, result
            elif result != first_result:
                assert len(nu) <= len(lam) + 1 and nu[0] <= lam[0] + 1
                return Counterexample(nu, t, first_order, order, (first_result, result))
    raise ShapeFitError(f"no divergent instance found over {lam}")  # pragma: no cover


@dataclass(frozen=True)
class CountIndependenceReport:
    """Rectification-target multiplicities grouped by straight target shape."""

    groups: dict[Part, tuple[tuple[IncreasingTableau, int], ...]]
    uniform_within_alphabet: bool
    uniform_across_alphabets: bool  # recorded observation, not asserted by callers
    total: int

    def report(self, instance: str) -> Report:
        return Report(
            "count-independence",
            instance,
            "uniform" if self.uniform_within_alphabet else "nonuniform",
            {
                "total": self.total,
                "groups": {
                    str(list(shape)): [[t, n] for t, n in grp] for shape, grp in self.groups.items()
                },
                "uniform_across_alphabets": self.uniform_across_alphabets,
            },
        )


def check_count_independence(shape: SkewShape, alphabet: Iterable[int]) -> CountIndependenceReport:
    """Group rectifications of all fillings from the alphabet by target.

    Asserting scope: within each (target shape, target value set) class the
    multiplicities must agree.  Across value sets the counts are recorded only.
    """
    if shape.inner and not is_rectangle(shape.inner):
        raise ShapeFitError(f"inner shape {shape.inner} must be a rectangle")
    tally: dict[IncreasingTableau, int] = {}
    total = 0
    for t in enumerate_increasing(shape, alphabet):
        result = krect(t)
        tally[result] = tally.get(result, 0) + 1
        total += 1
    groups: dict[Part, list[tuple[IncreasingTableau, int]]] = {}
    for target, n in sorted(tally.items(), key=lambda kv: (kv[0].outer, kv[0].cells)):
        groups.setdefault(target.outer, []).append((target, n))
    uniform_within = True
    uniform_across = True
    for grp in groups.values():
        by_values: dict[frozenset[int], set[int]] = {}
        for target, n in grp:
            by_values.setdefault(target.values, set()).add(n)
        if any(len(ns) > 1 for ns in by_values.values()):
            uniform_within = False
        if len({n for _, n in grp}) > 1:
            uniform_across = False
    return CountIndependenceReport(
        {shape_: tuple(grp) for shape_, grp in groups.items()},
        uniform_within,
        uniform_across,
        total,
    )


@dataclass(frozen=True)
class SuperstandardReport:
    results: tuple[IncreasingTableau, ...]
    any_superstandard: bool
    consistent: bool  # if any order reached a superstandard target, all agreed

    def report(self, instance: str) -> Report:
        branch = "superstandard-everywhere" if self.any_superstandard else "none-superstandard"
        return Report(
            "superstandard-independence",
            instance,
            branch if self.consistent else "inconsistent",
            {"distinct_results": len(set(self.results))},
        )


def check_superstandard_independence(t: IncreasingTableau) -> SuperstandardReport:
    """Rectify under every order; a superstandard result forces full agreement."""
    if psize(t.inner) > 5:
        raise ShapeFitError("inner shape too large to exhaust rectification orders")
    results = tuple(krect(t, order) for order in rectification_orders(t.inner))
    any_ss = any(is_superstandard(r) for r in results)
    consistent = (not any_ss) or len(set(results)) == 1
    return SuperstandardReport(results, any_ss, consistent)


def available_steps(
    shape: SkewShape, ambient: AmbientRectangle, single_corner: bool = False
) -> list[SlideStep]:
    """Every legal slide step from a shape.

    With single_corner the steps move into one corner at a time.  Equivalence
    sweeps use this mode: when several bullets are in play at once, the order
    in which unrelated bullets take their switches is set by the label values,
    so mid-slide configuration sequences of same-shape rectangular tableaux can
    interleave differently even though every individual bullet moves the same
    way; one bullet at a time removes the interleaving freedom (both displayed
    divergence phenomena already occur under single-corner slides).
    """
    steps = []
    inner = removable_corners(shape.inner)
    outer = addable_corners(shape.outer, max_rows=ambient.rows, max_cols=ambient.cols)
    if single_corner:
        steps = [SlideStep("forward", frozenset({b})) for b in inner]
        steps += [SlideStep("reverse", frozenset({b})) for b in outer]
        return steps
    for subset in _nonempty_subsets(inner):
        steps.append(SlideStep("forward", frozenset(subset)))
    for subset in _nonempty_subsets(outer):
        steps.append(SlideStep("reverse", frozenset(subset)))
    return steps


def _nonempty_subsets(items: Sequence[Box]) -> Iterator[tuple[Box, ...]]:
    items = sorted(items)
    for mask in range(1, 1 << len(items)):
        yield tuple(b for i, b in enumerate(items) if mask >> i & 1)


def random_equivalence_run(
    a: IncreasingTableau,
    b: IncreasingTableau,
    ambient: AmbientRectangle,
    length: int,
    rng: random.Random,
) -> EquivalenceVerdict:
    """Compare a and b along one random mixed slide sequence, chosen on the fly.

    Steps are drawn from the legal moves of the common evolving shape, so the
    sequence is reproducible from the generator state.
    """
    from .jdt import kjdt_slide, rev_kjdt_slide

    stages = 0
    for _ in range(length):
        choices = available_steps(a.shape, ambient, single_corner=True)
        if not choices:
            break
        step = rng.choice(choices)
        verdict = check_strong_dual_equivalence(a, b, [step], ambient)
        if not verdict.equivalent:
            return EquivalenceVerdict(False, stages + (verdict.divergence_stage or 0), stages)
        stages += verdict.stages_compared
        if step.direction == "forward":
            a, b = kjdt_slide(a, step.corners), kjdt_slide(b, step.corners)
        else:
            a, b = rev_kjdt_slide(a, step.corners, ambient), rev_kjdt_slide(b, step.corners, ambient)
    return EquivalenceVerdict(True, None, stages)


def exhaustive_equivalence(
    a: IncreasingTableau,
    b: IncreasingTableau,
    ambient: AmbientRectangle,
    depth: int,
    single_corner: bool = True,
) -> EquivalenceVerdict | None:
    """First divergence over every slide sequence up to the given depth, else None.

    Prefixes are shared: after an equal-configuration step the recursion
    continues from the slid pair.  See available_steps for the single-corner
    default.
    """
    if a.shape != b.shape:
        raise ShapeFitError("tableaux must share one shape")
    if depth == 0:
        return None
    from .jdt import kjdt_slide, rev_kjdt_slide

    for step in available_steps(a.shape, ambient, single_corner=single_corner):
        verdict = check_strong_dual_equivalence(a, b, [step], ambient)
        if not verdict.equivalent:
            return verdict
        if step.direction == "forward":
            a2, b2 = kjdt_slide(a, step.corners), kjdt_slide(b, step.corners)
        else:
            a2, b2 = rev_kjdt_slide(a, step.corners, ambient), rev_kjdt_slide(b, step.corners, ambient)
        deeper = exhaustive_equivalence(a2, b2, ambient, depth - 1)
        if deeper is not None:
            return deeper
    return None

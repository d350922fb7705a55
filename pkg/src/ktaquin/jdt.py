"""Switch/slide machinery: slides, reverse slides, rectification, infusion, traces.

A slide places bullets on chosen corners and runs label stages; within a stage
the union of boxes holding the stage label or a bullet decomposes into
alternating short ribbons, each of which is switched (single-box components are
left alone).  Forward slides process labels upward and push bullets southeast;
reverse slides process labels downward and push bullets northwest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Literal, Sequence

from .shapes import (
    AmbientRectangle,
    Box,
    Part,
    ShapeFitError,
    SkewShape,
    add_boxes,
    addable_corners,
    contains,
    partition,
    psize,
    remove_boxes,
    removable_corners,
)
from .tableaux import Cells, IncreasingTableau, enumerate_increasing, superstandard

Direction = Literal["forward", "reverse"]


class InternalInvariantError(RuntimeError):
    """The engine reached a state the theory forbids; indicates a bug."""


_NEIGHBORS = ((0, 1), (0, -1), (1, 0), (-1, 0))


def _stage_components(
    entries: dict[Box, int], bullets: set[Box], label: int
) -> list[tuple[list[Box], list[Box]]]:
    """Connected components of {bullets, label boxes} that contain both kinds.

    Components are grown outward from bullets only: a component without a
    bullet cannot move, and one without a label box is a lone bullet.  Each
    returned component is checked to be an alternating short ribbon.
    """
    comps: list[tuple[list[Box], list[Box]]] = []
    unvisited = set(bullets)
    while unvisited:
        start = unvisited.pop()
        comp_bullets = [start]
        comp_labels: list[Box] = []
        seen = {start}
        frontier = [start]
        while frontier:
            r, c = frontier.pop()
            here_bullet = (r, c) in bullets
            for dr, dc in _NEIGHBORS:
                nb = (r + dr, c + dc)
                if nb in seen:
                    continue
                if nb in bullets:
                    if here_bullet:
                        raise InternalInvariantError(f"adjacent bullets at {(r, c)}, {nb}")
                    seen.add(nb)
                    unvisited.discard(nb)
                    comp_bullets.append(nb)
                    frontier.append(nb)
                elif entries.get(nb) == label:
                    if not here_bullet:
                        raise InternalInvariantError(f"adjacent equal labels at {(r, c)}, {nb}")
                    seen.add(nb)
                    comp_labels.append(nb)
                    frontier.append(nb)
        if comp_labels:
            _check_short_ribbon(seen)
            comps.append((comp_bullets, comp_labels))
    return comps


def _check_short_ribbon(comp: set[Box]) -> None:
    rows: dict[int, int] = {}
    cols: dict[int, int] = {}
    for r, c in comp:
        rows[r] = rows.get(r, 0) + 1
        cols[c] = cols.get(c, 0) + 1
        if (r, c + 1) in comp and (r + 1, c) in comp and (r + 1, c + 1) in comp:
            raise InternalInvariantError(f"ribbon contains a 2x2 block at {(r, c)}")
    if any(k > 2 for k in rows.values()) or any(k > 2 for k in cols.values()):
        raise InternalInvariantError("ribbon has more than two boxes in a row or column")


def _run_switches(
    entries: dict[Box, int],
    bullets: set[Box],
    reverse: bool,
    on_switch: Callable[[int, list[tuple[list[Box], list[Box]]]], None] | None = None,
) -> set[Box]:
    """Mutate entries/bullets through all label stages of one slide."""
    labels = sorted(set(entries.values()), reverse=reverse)
    for label in labels:
        comps = _stage_components(entries, bullets, label)
        if not comps:
            continue
        if on_switch is not None:
            on_switch(label, comps)
        for comp_bullets, comp_labels in comps:
            for b in comp_bullets:
                entries[b] = label
                bullets.discard(b)
            for x in comp_labels:
                del entries[x]
                bullets.add(x)
    return bullets


def _forward_slide(
    entries: dict[Box, int],
    inner: Part,
    outer: Part,
    corners: frozenset[Box],
    on_switch=None,
) -> tuple[Part, Part, frozenset[Box]]:
    """Slide in place into inner corners; returns (inner', outer', vacated boxes)."""
    if not corners:
        raise ShapeFitError("corner set must be nonempty")
    legal = set(removable_corners(inner))
    if not set(corners) <= legal:
        raise ShapeFitError(f"{sorted(set(corners) - legal)} are not inner corners of {inner}")
    bullets = set(corners)
    final = _run_switches(entries, bullets, reverse=False, on_switch=on_switch)
    try:
        new_inner = remove_boxes(inner, corners)
        new_outer = remove_boxes(outer, final)
    except ShapeFitError as exc:  # pragma: no cover - theory forbids this
        raise InternalInvariantError(f"slide left a non-partition shape: {exc}") from exc
    return new_inner, new_outer, frozenset(final)


def _reverse_slide(
    entries: dict[Box, int],
    inner: Part,
    outer: Part,
    corners: frozenset[Box],
    ambient: AmbientRectangle,
    on_switch=None,
) -> tuple[Part, Part, frozenset[Box]]:
    """Slide in place into outer corners; returns (inner', outer', vacated boxes)."""
    if not corners:
        raise ShapeFitError("corner set must be nonempty")
    ambient.require_fit(outer)
    legal = set(addable_corners(outer, max_rows=ambient.rows, max_cols=ambient.cols))
    if not set(corners) <= legal:
        raise ShapeFitError(
            f"{sorted(set(corners) - legal)} are not outer corners of {outer} in the ambient"
        )
    new_outer = add_boxes(outer, corners)
    bullets = set(corners)
    final = _run_switches(entries, bullets, reverse=True, on_switch=on_switch)
    try:
        new_inner = add_boxes(inner, final)
    except ShapeFitError as exc:  # pragma: no cover - theory forbids this
        raise InternalInvariantError(f"slide left a non-partition shape: {exc}") from exc
    return new_inner, new_outer, frozenset(final)


def kjdt_slide(t: IncreasingTableau, corners: Iterable[Box]) -> IncreasingTableau:
    """Forward slide of t into a nonempty set of inner corners."""
    entries = t.entries
    inner, outer, _ = _forward_slide(entries, t.inner, t.outer, frozenset(corners))
    return IncreasingTableau.make(outer, inner, entries)


def rev_kjdt_slide(
    t: IncreasingTableau, corners: Iterable[Box], ambient: AmbientRectangle
) -> IncreasingTableau:
    """Reverse slide of t into a nonempty set of outer corners within the ambient."""
    entries = t.entries
    inner, outer, _ = _reverse_slide(entries, t.inner, t.outer, frozenset(corners), ambient)
    return IncreasingTableau.make(outer, inner, entries)


def _label_groups_desc(cells: Cells) -> list[tuple[int, frozenset[Box]]]:
    groups: dict[int, set[Box]] = {}
    for r, c, v in cells:
        groups.setdefault(v, set()).add((r, c))
    return [(v, frozenset(groups[v])) for v in sorted(groups, reverse=True)]


def kinfusion(a: IncreasingTableau, b: IncreasingTableau) -> tuple[IncreasingTableau, IncreasingTableau]:
    """Slide b through a, largest label of a first; an involution on nested pairs.

    Requires b.inner == a.outer.  The first output is b fully slid (its inner
    shape becomes a.inner); the second records, with label m, the boxes vacated
    while sliding into a's m-labeled corners.
    """
    if b.inner != a.outer:
        raise ShapeFitError(f"inner shape of second tableau {b.inner} must equal outer of first {a.outer}")
    entries = b.entries
    inner, outer = b.inner, b.outer
    record: dict[Box, int] = {}
    original_outer = outer
    for label, boxes in _label_groups_desc(a.cells):
        inner, outer, vacated = _forward_slide(entries, inner, outer, boxes)
        for box in vacated:
            record[box] = label
    if inner != a.inner:  # pragma: no cover - theory forbids this
        raise InternalInvariantError("infusion did not consume the inner tableau's shape")
    first = IncreasingTableau.make(outer, inner, entries)
    second = IncreasingTableau.make(original_outer, outer, record)
    return first, second


def krect(t: IncreasingTableau, order: IncreasingTableau | None = None) -> IncreasingTableau:
    """Rectify t to straight shape following the given rectification order.

    The order is an increasing tableau of t's inner shape, processed largest
    label first; the default is the superstandard order.
    """
    if order is None:
        order = superstandard(t.inner)
    if order.inner != () or order.outer != t.inner:
        raise ShapeFitError(f"order must be a straight tableau of shape {t.inner}")
    return kinfusion(order, t)[0]


def rectification_orders(inner: Part) -> Iterator[IncreasingTableau]:
    """The canonical rectification orders: surjective fillings over {1..m}, m <= |inner|.

    Largest alphabets come first, so the superstandard order is yielded first.
    Distinct orders here are exactly the distinct corner-set sequences.
    """
    inner = partition(inner)
    n = psize(inner)
    if n == 0:
        yield superstandard(())
        return
    shape = SkewShape.straight(inner)
    for m in range(n, 0, -1):
        yield from enumerate_increasing(shape, range(1, m + 1), surjective=True)


@dataclass(frozen=True)
class SlideStep:
    """One slide instruction: a direction and the corners to move into."""

    direction: Direction
    corners: frozenset[Box]

    def __post_init__(self) -> None:
        object.__setattr__(self, "corners", frozenset(self.corners))
        if self.direction not in ("forward", "reverse"):
            raise ValueError(f"direction must be forward or reverse, got {self.direction!r}")
        if not self.corners:
            raise ValueError("corner set must be nonempty")


@dataclass(frozen=True)
class SwitchState:
    """Snapshot after placing bullets or after one switch stage."""

    outer: Part
    inner: Part
    cells: Cells
    bullets: frozenset[Box]
    stage: int | None  # label processed by the switch; None for bullet placement
    direction: Direction

    def configuration(self) -> tuple[frozenset[Box], frozenset[Box]]:
        """Numeric boxes and bullet boxes; both matter for comparing states."""
        return frozenset((r, c) for r, c, _ in self.cells), self.bullets

    def entries(self) -> dict[Box, int]:
        return {(r, c): v for r, c, v in self.cells}


@dataclass(frozen=True)
class SwitchTrace:
    """Slow-motion record of a slide sequence with box-of-origin bookkeeping.

    states[i] is reached from states[i-1] by placing bullets (stage None) or by
    one simultaneous switch of all ribbons of a label stage.  uniform_flags[i]
    tells whether that transition kept boxes of origin well defined; origins[i]
    maps numeric boxes to boxes of the starting tableau, and is None from the
    first non-uniform switch on (later flags are then reported False).
    """

    start: IncreasingTableau
    states: tuple[SwitchState, ...]
    uniform_flags: tuple[bool, ...]
    origins: tuple[dict[Box, Box] | None, ...]

    def final_tableau(self) -> IncreasingTableau:
        last = self.states[-1] if self.states else None
        if last is None:
            return self.start
        if last.direction == "forward":
            outer = remove_boxes(last.outer, last.bullets)
            inner = last.inner
        else:
            outer = last.outer
            inner = add_boxes(last.inner, last.bullets)
        return IncreasingTableau(outer, inner, last.cells)


class SlideStepError(ValueError):
    """A slide step was invalid when reached; carries the step index."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


def _traced_slide(
    entries: dict[Box, int],
    inner: Part,
    outer: Part,
    step: SlideStep,
    ambient: AmbientRectangle,
    origins: dict[Box, Box] | None,
) -> tuple[Part, Part, dict[Box, Box] | None, list[SwitchState], list[bool], list[dict[Box, Box] | None]]:
    states: list[SwitchState] = []
    flags: list[bool] = []
    origin_seq: list[dict[Box, Box] | None] = []

    if step.direction == "forward":
        legal = set(removable_corners(inner))
        if not step.corners <= legal:
            raise ShapeFitError(f"{sorted(step.corners - legal)} are not inner corners of {inner}")
        inner = remove_boxes(inner, step.corners)
        labels = sorted(set(entries.values()))
    else:
        ambient.require_fit(outer)
        legal = set(addable_corners(outer, max_rows=ambient.rows, max_cols=ambient.cols))
        if not step.corners <= legal:
            raise ShapeFitError(f"{sorted(step.corners - legal)} are not outer corners of {outer}")
        outer = add_boxes(outer, step.corners)
        labels = sorted(set(entries.values()), reverse=True)
    bullets = set(step.corners)

    def snapshot(stage: int | None, uniform: bool) -> None:
        states.append(
            SwitchState(
                outer,
                inner,
                tuple((r, c, v) for (r, c), v in sorted(entries.items())),
                frozenset(bullets),
                stage,
                step.direction,
            )
        )
        flags.append(uniform)
        origin_seq.append(dict(origins) if origins is not None else None)

    snapshot(None, origins is not None)

    for label in labels:
        comps = _stage_components(entries, bullets, label)
        if not comps:
            continue
        uniform = origins is not None
        if origins is not None:
            updates: dict[Box, Box] = {}
            for comp_bullets, comp_labels in comps:
                sources = {origins[x] for x in comp_labels}
                if len(sources) != 1:
                    uniform = False
                    break
                src = next(iter(sources))
                updates.update((bbox, src) for bbox in comp_bullets)
            if uniform:
                for _, comp_labels in comps:
                    for x in comp_labels:
                        del origins[x]
                origins.update(updates)
            else:
                origins = None
        for comp_bullets, comp_labels in comps:
            for b in comp_bullets:
                entries[b] = label
                bullets.discard(b)
            for x in comp_labels:
                del entries[x]
                bullets.add(x)
        snapshot(label, uniform)

    if step.direction == "forward":
        outer = remove_boxes(outer, bullets)
    else:
        inner = add_boxes(inner, bullets)
    return inner, outer, origins, states, flags, origin_seq


def switch_trace(
    t: IncreasingTableau, slides: Sequence[SlideStep], ambient: AmbientRectangle
) -> SwitchTrace:
    """Run the slides in slow motion, recording every switch state."""
    entries = t.entries
    inner, outer = t.inner, t.outer
    origins: dict[Box, Box] | None = {box: box for box in entries}
    states: list[SwitchState] = []
    flags: list[bool] = []
    origin_seq: list[dict[Box, Box] | None] = []
    for i, step in enumerate(slides):
        try:
            inner, outer, origins, st, fl, hs = _traced_slide(
                entries, inner, outer, step, ambient, origins
            )
        except ShapeFitError as exc:
            raise SlideStepError(i, str(exc)) from exc
        states.extend(st)
        flags.extend(fl)
        origin_seq.extend(hs)
    return SwitchTrace(t, tuple(states), tuple(flags), tuple(origin_seq))


def rev_krect_in_ambient(
    t: IncreasingTableau, ambient: AmbientRectangle
) -> tuple[IncreasingTableau, Box]:
    """Reverse-rectify a rectangular straight tableau to the ambient's southeast corner.

    Slides into all available outer corners until none remain; returns the
    resulting tableau and the northwest anchor of its c x d bounding block.
    """
    if not t.is_straight:
        raise ShapeFitError("input must be a straight tableau")
    lam = t.outer
    if lam and any(p != lam[0] for p in lam):
        raise ShapeFitError(f"input shape {lam} is not a rectangle")
    c, d = len(lam), (lam[0] if lam else 0)
    ambient.require_fit(lam)
    current = t
    while True:
        corners = addable_corners(current.outer, max_rows=ambient.rows, max_cols=ambient.cols)
        if not corners:
            break
        current = rev_kjdt_slide(current, frozenset(corners), ambient)
    expected_inner = partition(
        (ambient.cols,) * (ambient.rows - c) + (ambient.cols - d,) * c
    )
    if current.outer != ambient.full or current.inner != expected_inner:
        raise InternalInvariantError(
            f"reverse rectification landed on {current.outer}/{current.inner}, "
            f"expected the {c}x{d} block at the southeast corner"
        )
    return current, (ambient.rows - c + 1, ambient.cols - d + 1)

"""Named verification suites: golden examples, exhaustive sweeps, seeded property runs.

Each suite returns a SuiteResult; the CLI renders them and the acceptance tests
assert on them.  Scales default to the full verification scale.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .shapes import (
    AmbientRectangle,
    Box,
    DirectSumFrame,
    Part,
    SkewShape,
    boxes_of,
    contains,
    partition,
    partitions_in_rectangle,
    partitions_of,
    psize,
    removable_corners,
    star,
)
from .tableaux import (
    AugmentedTableau,
    IncreasingTableau,
    enumerate_augmented,
    enumerate_increasing,
    superstandard,
)
from .jdt import (
    SlideStep,
    kinfusion,
    kjdt_slide,
    krect,
    rectification_orders,
    rev_kjdt_slide,
    rev_krect_in_ambient,
    switch_trace,
)
from .coefficients import (
    coeff_C,
    coeff_D,
    coeff_D_buch,
    coeff_D_via_identity,
    coeff_E,
    coeff_E_via_C,
    coeff_c_classical,
    cached_coefficients,
    rect_tally,
    _key,
    _superstandard_key,
)
from .equivalence import (
    check_count_independence,
    check_superstandard_independence,
    exhaustive_equivalence,
    is_rectangle,
    nonrect_counterexample,
    random_equivalence_run,
    verify_origin_invariants,
)
from . import schur
from .products import diamond, odot, single_box


@dataclass
class SuiteResult:
    name: str
    ok: bool
    summary: str
    details: list[str] = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0

    def render(self) -> str:
        status = "ok" if self.ok else "FAIL"
        head = f"[{status}] {self.name}: {self.summary} ({self.elapsed:.2f}s)"
        if self.seed is not None:
            head += f" seed={self.seed}"
        return "\n".join([head] + [f"  {line}" for line in self.details])


def _timed(fn):
    def wrapper(*args, **kwargs) -> SuiteResult:
        t0 = time.time()
        result = fn(*args, **kwargs)
        result.elapsed = time.time() - t0
        return result

    return wrapper


# ---------------------------------------------------------------------------
# golden tables


def _t(rows, inner=()) -> IncreasingTableau:
    return IncreasingTableau.from_rows(rows, inner)


STAR_GROUP_TABLE: dict[IncreasingTableau, int] = {
    _t([[1, 2], [2]]): 1,
    _t([[1, 2], [3]]): 1,
    _t([[1, 3], [2]]): 1,
    _t([[1, 3], [3]]): 1,
    _t([[2, 3], [3]]): 1,
    _t([[1, 2], [2], [3]]): 1,
    _t([[1, 3], [2], [3]]): 1,
    _t([[1, 2], [2, 3]]): 1,
    _t([[1, 2], [2, 3], [3]]): 1,
    _t([[1, 2, 3], [2]]): 2,
    _t([[1, 2, 3], [3]]): 2,
    _t([[1, 2, 3], [2], [3]]): 1,
    _t([[1, 2, 3], [2, 3]]): 1,
}

AUGMENTED_WITNESSES = (
    AugmentedTableau((2, 1), (1,), ((1, 2, 1), (2, 1, 1)), ()),
    AugmentedTableau((2, 1), (1,), ((1, 2, 1),), ((2, 1),)),
    AugmentedTableau((2, 1), (1,), ((2, 1, 1),), ((1, 2),)),
)


@_timed
def star_groups_suite() -> SuiteResult:
    """The fifteen fillings of (2)*(2,1) over {1,2,3} and their target groups."""
    shape = star((2,), (2, 1))
    tally: dict[IncreasingTableau, int] = {}
    total = 0
    for t in enumerate_increasing(shape, {1, 2, 3}):
        r = krect(t)
        tally[r] = tally.get(r, 0) + 1
        total += 1
    ok = total == 15 and tally == STAR_GROUP_TABLE
    shapes = sorted({t.outer for t in tally})
    d_value = coeff_D((2,), (2, 1), (3, 1))
    ok = ok and len(shapes) == 7 and d_value == -2
    details = [f"{len(shapes)} target shapes over {total} fillings; splitting value {d_value}"]
    for target_shape in shapes:
        members = sorted(
            (t for t in tally if t.outer == target_shape), key=lambda t: t.cells
        )
        cells = ", ".join(f"{'/'.join(''.join(map(str, row)) for row in t.rows())} x{tally[t]}" for t in members)
        details.append(f"shape {target_shape}: {cells}")
    report = check_count_independence(shape, {1, 2, 3})
    ok = ok and report.uniform_within_alphabet
    return SuiteResult("star-groups", ok, "corner-to-corner enumeration groups", details)


@_timed
def augmented_witnesses_suite() -> SuiteResult:
    """The three marked witnesses and both routes to the ideal-sheaf value -3."""
    direct = coeff_E((1,), (1,), (2, 1))
    via_c = coeff_E_via_C((1,), (1,), (2, 1))
    family = tuple(enumerate_augmented(SkewShape((2, 1), (1,)), {1}))
    target = superstandard((1,))
    witnesses = tuple(t for t in family if krect(t.erase_x()) == target)
    ok = direct == via_c == -3 and set(witnesses) == set(AUGMENTED_WITNESSES)
    return SuiteResult(
        "augmented-witnesses",
        ok,
        f"value {direct} via marked fillings and {via_c} via rook strips, "
        f"{len(witnesses)} witnesses",
    )


@_timed
def rect_order_independence_suite(
    rects: Iterable[Part] = ((1,), (2,), (2, 2)), max_size: int = 7, alpha_max: int = 4
) -> SuiteResult:
    """Rectification from a rectangular inner shape ignores the order choice."""
    checked = 0
    failures: list[str] = []
    for rect in rects:
        rect = partition(rect)
        orders = list(
            enumerate_increasing(SkewShape.straight(rect), range(1, psize(rect) + 2))
        ) or [superstandard(())]
        for n in range(psize(rect), max_size + 1):
            for nu in partitions_of(n):
                if not contains(nu, rect) or nu == rect:
                    continue
                shape = SkewShape(nu, rect)
                for t in enumerate_increasing(shape, range(1, alpha_max + 1)):
                    results = {krect(t, order) for order in orders}
                    checked += 1
                    if len(results) != 1:
                        failures.append(f"{t} gives {len(results)} results")
    ok = not failures and checked > 0
    return SuiteResult(
        "rect-order-independence",
        ok,
        f"{checked} fillings, every order agrees" if ok else f"{len(failures)} failures",
        failures[:5],
    )


@_timed
def strong_equivalence_suite(max_area: int = 6, depth: int = 3, alpha_max: int = 4) -> SuiteResult:
    """Same-shape rectangular tableaux stay configuration-synchronized under slides.

    Sequences are exhaustive over single-corner steps; see available_steps for
    why multi-corner steps shuffle the switch interleaving.  The alphabet grows
    to area+... just enough on the largest rectangles to give several fillings.
    """
    pairs = 0
    failures: list[str] = []
    for c in range(1, 4):
        for d in range(1, 4):
            if c * d > max_area:
                continue
            alpha = max(alpha_max, c + d) if c * d >= 6 else alpha_max
            shape = SkewShape.straight((d,) * c)
            ambient = AmbientRectangle(c + 2, c + 2 + d + 2)
            tableaux = list(enumerate_increasing(shape, range(1, alpha + 1)))
            for i, a in enumerate(tableaux):
                for b in tableaux[i + 1 :]:
                    verdict = exhaustive_equivalence(a, b, ambient, depth)
                    pairs += 1
                    if verdict is not None:
                        failures.append(f"{a.rows()} vs {b.rows()} diverged")
    ok = not failures and pairs > 0
    return SuiteResult(
        "strong-equivalence",
        ok,
        f"{pairs} rectangular pairs equivalent on all single-corner sequences of depth <= {depth}"
        if ok
        else f"{len(failures)} divergent pairs",
        failures[:5],
    )


@_timed
def sharpness_suite(max_size: int = 6) -> SuiteResult:
    """Every non-rectangular inner shape admits order-dependent rectification."""
    count = 0
    failures: list[str] = []
    for n in range(1, max_size + 1):
        for lam in partitions_of(n):
            if is_rectangle(lam):
                continue
            try:
                c = nonrect_counterexample(lam)
            except Exception as exc:  # pragma: no cover
                failures.append(f"{lam}: {exc}")
                continue
            count += 1
            if c.results[0] == c.results[1]:
                failures.append(f"{lam}: results agree")
    seed_instance = nonrect_counterexample((2, 1))
    golden_ok = (
        seed_instance.nu == (3, 3, 2)
        and seed_instance.tableau.cells
        == ((1, 3, 2), (2, 2, 1), (2, 3, 4), (3, 1, 1), (3, 2, 3))
        and seed_instance.order1 == _t([[1, 2], [3]])
        and seed_instance.order2 == _t([[1, 3], [2]])
        and seed_instance.results[0] == _t([[1, 2, 4], [3]])
        and seed_instance.results[1] == _t([[1, 2, 4], [3, 4]])
    )
    spread = nonrect_counterexample((6, 6, 3, 1))
    golden_ok = golden_ok and spread.nu == (7, 6, 5, 2, 1) and spread.tableau.cells == (
        (1, 7, 2),
        (3, 4, 1),
        (3, 5, 4),
        (4, 2, 3),
        (5, 1, 1),
    )
    ok = not failures and golden_ok
    return SuiteResult(
        "sharpness",
        ok,
        f"{count} non-rectangular shapes produce verified divergences; seed instances exact"
        if ok
        else "failures",
        failures[:5],
    )


def _random_skew_instance(rng: random.Random, max_boxes: int) -> IncreasingTableau:
    while True:
        outer = []
        width = rng.randint(1, 4)
        for _ in range(rng.randint(1, 4)):
            outer.append(width)
            if width > 1 and rng.random() < 0.5:
                width = rng.randint(1, width)
        outer = partition(sorted(outer, reverse=True))
        if not (0 < psize(outer) <= max_boxes):
            continue
        inner_rows = [rng.randint(0, w) for w in outer]
        inner_rows = partition(sorted(inner_rows, reverse=True))
        if not contains(outer, inner_rows) or psize(outer) - psize(inner_rows) == 0:
            continue
        entries = {}
        shape = SkewShape(outer, inner_rows)
        for r, c in shape.boxes():
            lo = max(entries.get((r, c - 1), 0), entries.get((r - 1, c), 0))
            entries[(r, c)] = lo + rng.randint(1, 2)
        return IncreasingTableau.make(outer, inner_rows, entries)


@_timed
def reversibility_suite(instances: int = 1000, seed: int = 2024) -> SuiteResult:
    """Forward slides undo through reverse slides into the vacated boxes."""
    rng = random.Random(seed)
    checked = 0
    failures = 0
    while checked < instances:
        t = _random_skew_instance(rng, 9)
        corners = removable_corners(t.inner)
        if not corners:
            continue
        chosen = frozenset(rng.sample(corners, rng.randint(1, len(corners))))
        slid = kjdt_slide(t, chosen)
        vacated = frozenset(set(boxes_of(t.outer)) - set(boxes_of(slid.outer)))
        ambient = AmbientRectangle(len(t.outer) + 1, len(t.outer) + 2 + t.outer[0])
        if rev_kjdt_slide(slid, vacated, ambient) != t:
            failures += 1
        checked += 1
    result = SuiteResult(
        "reversibility",
        failures == 0,
        f"{checked} random slides undone exactly" if not failures else f"{failures} failures",
    )
    result.seed = seed
    return result


@_timed
def infusion_involution_suite(instances: int = 1000, seed: int = 4096) -> SuiteResult:
    """Infusion applied twice returns the original nested pair."""
    rng = random.Random(seed)
    checked = 0
    failures = 0
    while checked < instances:
        t = _random_skew_instance(rng, 9)
        if not (0 < psize(t.inner) <= 6):
            continue
        orders = list(rectification_orders(t.inner))
        a = rng.choice(orders)
        c, w = kinfusion(a, t)
        if kinfusion(c, w) != (a, t):
            failures += 1
        checked += 1
    result = SuiteResult(
        "infusion-involution",
        failures == 0,
        f"{checked} nested pairs return exactly" if not failures else f"{failures} failures",
    )
    result.seed = seed
    return result


@_timed
def rev_rect_anchor_suite(max_area: int = 6, max_ambient: tuple[int, int] = (4, 5)) -> SuiteResult:
    """Reverse rectification parks every rectangle at the ambient's southeast corner."""
    checked = 0
    failures: list[str] = []
    max_rows, max_cols = max_ambient
    for c in range(1, max_rows + 1):
        for d in range(1, max_cols + 1):
            if c * d > max_area:
                continue
            shape = SkewShape.straight((d,) * c)
            for k in range(c, max_rows + 1):
                for cols in range(d, max_cols + 1):
                    ambient = AmbientRectangle(k, k + cols)
                    for t in enumerate_increasing(shape, range(1, c * d + 2)):
                        out, anchor = rev_krect_in_ambient(t, ambient)
                        checked += 1
                        if anchor != (k - c + 1, cols - d + 1):
                            failures.append(f"{t.rows()} in {k}x{cols} at {anchor}")
    ok = not failures and checked > 0
    return SuiteResult(
        "rev-rect-anchor",
        ok,
        f"{checked} reverse rectifications anchored southeast" if ok else f"{len(failures)} failures",
        failures[:5],
    )


@_timed
def origin_invariants_suite(max_area: int = 6, depth: int = 3, alpha_max: int = 4) -> SuiteResult:
    """Reverse-slide traces from rectangles keep origins clean and ordered."""
    checked = 0
    failures: list[str] = []

    def extend(t: IncreasingTableau, steps: list[SlideStep], ambient: AmbientRectangle, left: int):
        nonlocal checked
        trace = switch_trace(t, steps, ambient)
        report = verify_origin_invariants(trace)
        checked += 1
        if not report.clean:
            failures.append(f"{t.rows()} after {len(steps)} steps: {report.violations[0]}")
            return
        if left == 0:
            return
        final = trace.final_tableau()
        from .shapes import addable_corners

        corners = addable_corners(final.outer, max_rows=ambient.rows, max_cols=ambient.cols)
        for mask in range(1, 1 << len(corners)):
            subset = frozenset(b for i, b in enumerate(corners) if mask >> i & 1)
            extend(t, steps + [SlideStep("reverse", subset)], ambient, left - 1)

    for c in range(1, 4):
        for d in range(1, 4):
            if c * d > max_area:
                continue
            ambient = AmbientRectangle(c + 2, c + 2 + d + 2)
            shape = SkewShape.straight((d,) * c)
            for t in enumerate_increasing(shape, range(1, alpha_max + 1)):
                extend(t, [], ambient, depth)
    ok = not failures and checked > 0
    return SuiteResult(
        "origin-invariants",
        ok,
        f"{checked} reverse traces clean" if ok else f"{len(failures)} violations",
        failures[:5],
    )


@_timed
def count_independence_suite() -> SuiteResult:
    """Multiplicity tables for rectangular-inner shapes are target independent."""
    cases = [
        (star((2,), (2, 1)), frozenset({1, 2, 3})),
        (SkewShape((2, 2), (1,)), frozenset({1, 2, 3})),
        (SkewShape((3, 2), (2, 2)), frozenset({1, 2, 3})),
        (SkewShape((3, 1), ()), frozenset({1, 2, 3})),
    ]
    details = []
    ok = True
    for shape, alpha in cases:
        report = check_count_independence(shape, alpha)
        ok = ok and report.uniform_within_alphabet
        details.append(
            f"{shape.outer}/{shape.inner}: {report.total} fillings, "
            f"{len(report.groups)} target shapes, across-alphabet uniform: "
            f"{report.uniform_across_alphabets}"
        )
    return SuiteResult("count-independence", ok, f"{len(cases)} shapes grouped", details)


@_timed
def superstandard_independence_suite(max_inner: int = 4, max_extra: int = 3, alpha_max: int = 4) -> SuiteResult:
    """A superstandard rectification under one order forces it under all."""
    checked = 0
    failures: list[str] = []
    for n in range(2, max_inner + 1):
        for lam in partitions_of(n):
            if is_rectangle(lam):
                continue
            for extra in range(1, max_extra + 1):
                for nu in partitions_of(n + extra):
                    if not contains(nu, lam):
                        continue
                    for t in enumerate_increasing(SkewShape(nu, lam), range(1, alpha_max + 1)):
                        report = check_superstandard_independence(t)
                        checked += 1
                        if not report.consistent:
                            failures.append(f"{t}")
    ok = not failures and checked > 0
    return SuiteResult(
        "superstandard-independence",
        ok,
        f"{checked} skew fillings consistent" if ok else f"{len(failures)} failures",
        failures[:5],
    )


@_timed
def products_suite() -> SuiteResult:
    """The corner-to-corner and insertion products on their displayed instances."""
    z = _t([[1, 2, 3], [2, 4, 5]])
    u = _t([[1, 2]])
    left = odot(z, u)
    right = diamond(z, u)
    assoc_left = odot(odot(z, single_box(1)), single_box(2))
    assoc_right = odot(z, odot(single_box(1), single_box(2)))
    ok = (
        left == _t([[1, 2, 3], [2, 3, 5], [4, 5]])
        and right == _t([[1, 2, 3], [2, 3, 5], [4]])
        and assoc_left == right
        and assoc_right == left
        and assoc_left != assoc_right
    )
    return SuiteResult(
        "products",
        ok,
        "corner-to-corner and insertion products differ exactly as displayed",
    )


@_timed
def degeneration_suite(max_total: int = 8) -> SuiteResult:
    """When sizes add up, all rules agree with the classical LR coefficient."""
    checked = 0
    failures: list[str] = []
    for total in range(0, max_total + 1):
        for a in range(0, total + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    oracle = schur.schur_product_expansion(lam, mu)
                    for nu in partitions_of(total):
                        expected = oracle.get(nu, 0)
                        c_val = coeff_C(lam, mu, nu)
                        d_val = coeff_D(lam, mu, nu)
                        cls = coeff_c_classical(lam, mu, nu)
                        checked += 1
                        if not (c_val == d_val == cls == expected):
                            failures.append(
                                f"{lam},{mu}->{nu}: C={c_val} D={d_val} c={cls} schur={expected}"
                            )
    ok = not failures and checked > 0
    return SuiteResult(
        "degeneration",
        ok,
        f"{checked} classical triples agree across four routes" if ok else f"{len(failures)} failures",
        failures[:8],
    )


def _frames(k_max: int, n_max: int) -> Iterator[DirectSumFrame]:
    sides = [(k, n) for k in range(1, k_max + 1) for n in range(k + 1, n_max + 1)]
    for k1, n1 in sides:
        for k2, n2 in sides:
            yield DirectSumFrame(k1, n1, k2, n2)


@_timed
def triple_agreement_suite(k_max: int = 2, n_max: int = 4) -> SuiteResult:
    """Splitting coefficients agree across the slide rule, the set-valued rule,
    and the direct-sum identity, over every frame at the given scale."""
    checked = 0
    distinct: set[tuple] = set()
    failures: list[str] = []
    for frame in _frames(k_max, n_max):
        lams = list(partitions_in_rectangle(frame.k1, frame.n1 - frame.k1))
        mus = list(partitions_in_rectangle(frame.k2, frame.n2 - frame.k2))
        nus = list(partitions_in_rectangle(frame.k, frame.n - frame.k))
        for lam in lams:
            for mu in mus:
                for nu in nus:
                    jdt = coeff_D(lam, mu, nu)
                    buch = coeff_D_buch(lam, mu, nu)
                    ident = coeff_D_via_identity(lam, mu, nu, frame)
                    checked += 1
                    distinct.add((lam, mu, nu))
                    if not (jdt == buch == ident):
                        failures.append(f"{lam},{mu}->{nu} in {frame}: {jdt}/{buch}/{ident}")
    ok = not failures and checked > 0
    return SuiteResult(
        "triple-agreement",
        ok,
        f"{checked} frame triples ({len(distinct)} distinct) agree on all three routes"
        if ok
        else f"{len(failures)} disagreements",
        failures[:8],
    )


@_timed
def sign_invariant_suite() -> SuiteResult:
    """Every cached nonzero coefficient carries the parity-predicted sign."""
    bad = []
    seen = 0
    for (kind, lam, mu, nu), value in cached_coefficients().items():
        if kind not in ("C", "D", "E", "F") or value == 0:
            continue
        seen += 1
        expected = -1 if (psize(nu) - psize(lam) - psize(mu)) % 2 else 1
        if (value > 0) != (expected > 0):
            bad.append(f"{kind} {lam},{mu}->{nu} = {value}")
    ok = not bad
    return SuiteResult(
        "sign-invariant",
        ok,
        f"{seen} nonzero cached coefficients match the parity sign" if ok else f"{len(bad)} bad",
        bad[:8],
    )


@_timed
def random_equivalence_suite(runs: int = 100, seed: int = 11, length: int = 4) -> SuiteResult:
    """Random mixed slide sequences keep 2x2 pairs configuration-equal."""
    rng = random.Random(seed)
    shape = SkewShape.straight((2, 2))
    ambient = AmbientRectangle(4, 8)
    tableaux = list(enumerate_increasing(shape, range(1, 5)))
    failures = 0
    for _ in range(runs):
        a, b = rng.choice(tableaux), rng.choice(tableaux)
        verdict = random_equivalence_run(a, b, ambient, length, rng)
        if not verdict.equivalent:
            failures += 1
    result = SuiteResult(
        "random-equivalence",
        failures == 0,
        f"{runs} random mixed runs equivalent" if not failures else f"{failures} failures",
    )
    result.seed = seed
    return result


SUITES = {
    "star-groups": star_groups_suite,
    "augmented-witnesses": augmented_witnesses_suite,
    "rect-order-independence": rect_order_independence_suite,
    "strong-equivalence": strong_equivalence_suite,
    "random-equivalence": random_equivalence_suite,
    "sharpness": sharpness_suite,
    "reversibility": reversibility_suite,
    "infusion-involution": infusion_involution_suite,
    "rev-rect-anchor": rev_rect_anchor_suite,
    "origin-invariants": origin_invariants_suite,
    "count-independence": count_independence_suite,
    "superstandard-independence": superstandard_independence_suite,
    "products": products_suite,
    "degeneration": degeneration_suite,
    "triple-agreement": triple_agreement_suite,
    "sign-invariant": sign_invariant_suite,
}

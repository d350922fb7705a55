"""Strong dual equivalence: rectangles synchronize, notched shapes do not.

Two same-shape tableaux are strongly dual equivalent when a common slide
sequence drags their bullets through identical configurations.  Rectangular
shapes force this; a shape with an inside corner lets two fillings route the
very first switch differently.
"""

import random

from ktaquin import AmbientRectangle, IncreasingTableau, SlideStep, switch_trace
from ktaquin.equivalence import (
    check_strong_dual_equivalence,
    random_equivalence_run,
    verify_origin_invariants,
)
from ktaquin.formats import format_switch_state

T = IncreasingTableau.from_rows

print("== the two standard fillings of (2,1) split immediately ==")
a, b = T([[1, 2], [3]]), T([[1, 3], [2]])
ambient = AmbientRectangle(2, 5)
step = SlideStep("reverse", frozenset({(2, 2)}))
verdict = check_strong_dual_equivalence(a, b, [step], ambient)
print(f"verdict: divergent at switch {verdict.divergence_stage}")
for name, t in (("first", a), ("second", b)):
    state = switch_trace(t, [step], ambient).states[1]
    print(f"\n{name} filling after its first switch:")
    print(format_switch_state(state))

print("\n== rectangles never split: 200 random mixed runs on 2x2 fillings ==")
rng = random.Random(1)
shape_tabs = [
    T([[1, 2], [2, 3]]), T([[1, 2], [3, 4]]), T([[1, 3], [2, 4]]), T([[1, 2], [2, 4]]),
]
runs = 0
for _ in range(200):
    x, y = rng.choice(shape_tabs), rng.choice(shape_tabs)
    assert random_equivalence_run(x, y, AmbientRectangle(4, 8), 4, rng).equivalent
    runs += 1
print(f"{runs} runs, all configuration-equal")

print("\n== boxes of origin stay ordered along reverse slides from a rectangle ==")
t = T([[1, 2, 3], [2, 3, 4]])
steps = [SlideStep("reverse", frozenset({(1, 4)})), SlideStep("reverse", frozenset({(3, 1)}))]
report = verify_origin_invariants(switch_trace(t, steps, AmbientRectangle(4, 9)))
print(f"{report.stages_checked} stages checked, violations: {len(report.violations)}")

print("\n== a notched shape flags its incomparable origins at once ==")
notched = T([[1, 2, 3, 4, 5], [6, 7, 8, 9], [10, 11], [12]])
report = verify_origin_invariants(
    switch_trace(notched, [SlideStep("reverse", frozenset({(3, 3)}))], AmbientRectangle(5, 11))
)
print(f"{len(report.violations)} violations, the first being:")
for violation in report.violations[:3]:
    print(f"stage {violation.stage}: {violation.kind} ({violation.detail})")

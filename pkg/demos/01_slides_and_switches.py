"""Slides in slow motion: bullets, ribbons, switches, and reversibility.

A slide drops bullets on chosen corners and walks them past the entries one
label at a time; within a stage, every alternating ribbon of {bullet, label}
switches its two symbols.  Labels can duplicate along the way, which is the
whole point of this flavor of sliding: only the set of values is preserved.
"""

from ktaquin import AmbientRectangle, IncreasingTableau, SlideStep, kjdt_slide, switch_trace
from ktaquin.formats import format_tableau, format_trace

t = IncreasingTableau.make(
    (4, 3, 2),
    (2, 1),
    {(1, 3): 1, (1, 4): 2, (2, 2): 2, (2, 3): 3, (3, 1): 2, (3, 2): 3},
)

print("start (dots mark the inner shape):")
print(format_tableau(t))

print("\nslow motion of the slide into both inner corners:")
trace = switch_trace(t, [SlideStep("forward", frozenset({(1, 2), (2, 1)}))], AmbientRectangle(3, 8))
print(format_trace(trace))

out = kjdt_slide(t, {(1, 2), (2, 1)})
print("\nafter deleting the parked bullets:")
print(format_tableau(out))
print(f"\nvalue set before {sorted(t.values)} and after {sorted(out.values)} (multiplicities differ!)")

"""Rectification and why the inner shape's rectangularity matters.

Rectifying a skew tableau means sliding until the shape is straight.  The
answer can depend on the order in which the inner corners are consumed; with a
rectangular inner shape it never does, and that well-definedness is what makes
the corner-to-corner product and the splitting rule work.
"""

from ktaquin import SkewShape, enumerate_increasing, krect, rectification_orders
from ktaquin.equivalence import nonrect_counterexample
from ktaquin.formats import format_tableau

print("== rectangular inner shape: every order agrees ==")
shape = SkewShape((4, 2, 1), (2,))
sample = next(enumerate_increasing(shape, {1, 2, 3}))
print(format_tableau(sample))
results = {krect(sample, order) for order in rectification_orders((2,))}
print(f"-> {len(results)} distinct rectification(s):")
print(format_tableau(next(iter(results))))

print("\n== the smallest non-rectangle (2,1): order suddenly matters ==")
c = nonrect_counterexample((2, 1))
print(format_tableau(c.tableau))
for order, result in zip((c.order1, c.order2), c.results):
    print("\nunder the order")
    print(format_tableau(order))
    print("the tableau rectifies to")
    print(format_tableau(result))

print("\n== the same mechanism, spread over a bigger inner shape ==")
big = nonrect_counterexample((6, 6, 3, 1))
print(format_tableau(big.tableau))
print(f"two orders give straight shapes {big.results[0].outer} and {big.results[1].outer}")

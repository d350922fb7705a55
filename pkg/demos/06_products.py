"""Two tableau products that look alike and still disagree.

The corner-to-corner product rectifies both factors placed corner to corner;
letter insertion is the same thing with a single box, and folding insertions
along a reading word gives a second product.  The pair below separates them,
and the culprit is the non-associativity of the corner-to-corner product.
"""

from ktaquin.tableaux import IncreasingTableau, row_reading_word
from ktaquin.products import diamond, hecke_insert, odot, single_box
from ktaquin.formats import format_tableau

T = IncreasingTableau.from_rows
z = T([[1, 2, 3], [2, 4, 5]])
u = T([[1, 2]])

print("left factor:")
print(format_tableau(z))
print("\nright factor:")
print(format_tableau(u))

print("\ncorner-to-corner product:")
print(format_tableau(odot(z, u)))

print(f"\ninsertion product along the reading word {row_reading_word(u)}:")
print(format_tableau(diamond(z, u)))

print("\nassociativity is the culprit:")
left = odot(odot(z, single_box(1)), single_box(2))
right = odot(z, odot(single_box(1), single_box(2)))
print("(z . [1]) . [2] =")
print(format_tableau(left))
print("z . ([1] . [2]) =")
print(format_tableau(right))
print(f"equal? {left == right}")

print("\nsingle-letter insertions merge repeats:")
for x in (1, 2, 6):
    print(f"[1 2] <- {x} = {hecke_insert(T([[1, 2]]), x).rows()}")

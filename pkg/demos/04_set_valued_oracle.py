"""The set-valued tableau rule: an oracle that never slides anything.

The splitting coefficient counts set-valued fillings of the target shape whose
bottom-up reading word is a reverse lattice word on both letter intervals.
The two surviving fillings below are why the flagship value is -2.
"""

from ktaquin.tableaux import enumerate_set_valued, is_partial_reverse_lattice, reading_word
from ktaquin.formats import format_tableau

lam, mu, nu = (2,), (2, 1), (3, 1)
p, q = len(lam), len(mu)
content = lam + mu

print(f"set-valued fillings of {nu} with content {content}:")
total = 0
winners = []
for t in enumerate_set_valued(nu, content):
    word = reading_word(t)
    ok = is_partial_reverse_lattice(word, (1, p)) and is_partial_reverse_lattice(word, (p + 1, p + q))
    total += 1
    if ok:
        winners.append((t, word))

print(f"{total} fillings, {len(winners)} pass both lattice tests:\n")
for t, word in winners:
    print(format_tableau(t))
    print(f"reading word: {''.join(map(str, word))}\n")

sign = -1 if (sum(nu) + sum(lam) + sum(mu)) % 2 else 1
print(f"value: {sign} * {len(winners)} = {sign * len(winners)}")

#!/usr/bin/env python3
# The tableau rule: split expansions of key polynomials counted by sequences
# of increasing tableaux, an independent route to the same coefficients.

from coxsph.polyring import SplitSet, key_polynomial, split_expand
from coxsph.splitrule import (
    build_t_alpha,
    eg_column_insert,
    row_word,
    ry_expand,
    ry_tableau_sequences,
)

# Every composition has a target tableau built by stripping descents.
alpha = (0, 0, 0, 2, 1)
target = build_t_alpha(alpha)
print("target tableau of", alpha, "->", target.to_lists())

# Column insertion sends reduced words to increasing tableaux; both words
# below insert to the target.
print("insert (4,5,4):", eg_column_insert((4, 5, 4)).to_lists())
print("insert (5,4,5):", eg_column_insert((5, 4, 5)).to_lists())
print("row word of target:", row_word(target))

# Coefficients count tableau sequences: one tableau per block, entries above
# the block's cut, row words concatenating to a reduced word that inserts to
# the target. Cutting after 1, 2, 4, 5 in six variables:
split = SplitSet(6, (1, 2, 4, 5))
expansion = ry_expand(alpha, split)
key = ((1,), (1,), (1, 0), (0,), (0,))
print("\ncoefficient at", key, "=", expansion.coefficients[key])
for seq in ry_tableau_sequences(alpha, split)[key]:
    print("  counted sequence:", [t.to_lists() for t in seq])

# The polynomial route gives identical numbers.
peeled = split_expand(key_polynomial(alpha + (0,)), split)
assert peeled.coefficients == expansion.coefficients
print("\ntableau rule matches polynomial peeling on every coefficient")

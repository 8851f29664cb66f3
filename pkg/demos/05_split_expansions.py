#!/usr/bin/env python3
# Split symmetry: cutting x1..xn into blocks, expanding block-symmetric
# polynomials over products of per-block Schur polynomials, and testing
# multiplicity-freeness.

from coxsph import harness
from coxsph.polyring import (
    SplitSet,
    is_D_multiplicity_free,
    is_split_symmetric,
    key_polynomial,
    split_expand,
    staircase_test,
)

# Cutting after positions 2 and 4 gives blocks {x1,x2}, {x3,x4}, {x5}.
split = SplitSet(5, (2, 4))
print("blocks:", split.blocks)

kappa = key_polynomial((1, 5, 2, 4, 3))
print("key(1,5,2,4,3) split-symmetric:", is_split_symmetric(kappa, split))

# Its block-Schur expansion has 17 products, two with coefficient 2.
expansion = split_expand(kappa, split)
print(harness.format_expansion(expansion))
print("multiplicity-free:", is_D_multiplicity_free(kappa, split))
assert expansion.reconstruct() == kappa

# The staircase test: act on (n, ..., 1) by a permutation, split at the
# complement of I, and ask for multiplicity-freeness. For 24531 with
# I = {1, 3} the coefficient 2 above answers no, matching the witness search.
print("\nstaircase test, 24531 with I={1,3}:", staircase_test((2, 4, 5, 3, 1), (1, 3)))
print("witness search for the same query: ", harness.run_check("A4", "24531", (1, 3)).spherical)

# Both verdicts agree across all of S5 (and S6 under --slow in the CLI).
report = harness.run_consistency(5)
print(f"\nS5 sweep: {report.pairs_checked} (w, I) pairs, "
      f"{len(report.disagreements)} disagreements")

#!/usr/bin/env python3
# Key polynomials two ways, plus the polynomial machinery they rest on.

from coxsph.polyring import (
    Poly,
    demazure_pi,
    expand_in_keys,
    key_polynomial,
    key_via_kohnert,
    schur,
)

# The isobaric divided difference symmetrizes one adjacent pair at a time.
f = Poly.monomial((2, 0))
print("pi_1(x1^2) =", demazure_pi(1, f))

# A weakly decreasing composition is a bare monomial; sorting moves feed it
# through the operator.
print("key(3,1,0)  =", key_polynomial((3, 1, 0)))
print("key(0,2)    =", key_polynomial((0, 2)))
print("key(1,2,0,1)=", key_polynomial((1, 2, 0, 1)))

# The diagram-move rule computes the same polynomials by pushing the
# rightmost cell of a row upward in its column.
alpha = (1, 3, 0, 2)
assert key_polynomial(alpha) == key_via_kohnert(alpha)
print("\nboth rules agree on", alpha)

# Fully sorted ascending compositions give whole Schur polynomials.
assert key_polynomial((0, 1, 2)) == schur((2, 1), 3)
print("key(0,1,2) is the full Schur polynomial of shape (2,1)")

# Any polynomial expands uniquely in the key basis by peeling the smallest
# exponent.
g = key_polynomial((1, 2, 0, 1)) + key_polynomial((2, 2, 0, 0))
print("\nkey coefficients of g:", expand_in_keys(g))

#!/usr/bin/env python3
# Witness words: a reduced word is an I-witness when every generator outside I
# appears at most once and each diagram component of I stays within its
# budget. An element is I-spherical when some reduced word is an I-witness.

from coxsph import (
    coxeter_system,
    evaluate,
    find_witness,
    is_I_spherical,
    parse_word,
    verify_witness,
)

e8 = coxeter_system("E8")
word = parse_word("s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s6 s7 s6 s8 s7 s6")
w = evaluate(e8, word)
J = e8.left_descents(w)
print("element length:", w.length, " J(w):", sorted(J))

# This word uses s6 three times while 6 is outside J(w), so it fails the
# once-only condition...
print("given word is a witness:", verify_witness(e8, w, J, word))

# ...but a braid-equivalent rewriting is a witness, so w is J(w)-spherical.
other = parse_word("s2 s3 s4 s2 s3 s4 s5 s4 s2 s3 s1 s4 s5 s7 s8 s7 s6 s7 s8")
print("rewritten word is a witness:", verify_witness(e8, w, J, other))

cert = find_witness(e8, w, J)
print("search found:", cert)
print("letter counts:", dict(sorted(cert.per_node_counts.items())))

# A permutation example: 24531 admits no witness for I = {1, 3}.
a4 = coxeter_system("A4")
w = evaluate(a4, parse_word("s3 s1 s2 s3 s4 s3"))
print("\n24531 is {1,3}-spherical:", is_I_spherical(a4, w, {1, 3}))

# Its inverse 51423 is spherical: the verdict is not inverse invariant.
print("51423 is maximally spherical:",
      is_I_spherical(a4, w.inverse(), a4.left_descents(w.inverse())))

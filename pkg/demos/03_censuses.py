#!/usr/bin/env python3
# Whole-group censuses: which elements admit a witness for their own descent
# set? Small ranks enumerate fully in well under a second each.

from coxsph import harness

for name in ("A3", "A4", "B3", "D4", "G2"):
    report = harness.run_census(name)
    print(
        f"{name:5s} order {report.total:5d}: "
        f"{report.spherical_count:5d} spherical, "
        f"{len(report.nonspherical):4d} not"
    )

# The 21 bad permutations of S5:
report = harness.run_census("A4")
print("\nS5 elements with no witness:")
print(" ", " ".join(report.nonspherical))

# F4 keeps only 119 spherical elements out of 1152.
report = harness.run_census("F4")
print(f"\nF4: {report.spherical_count} spherical of {report.total}")

# Each spherical entry carries its witness word; entries serialize to JSON.
entry = next(e for e in report.entries if e.spherical and e.left_descents)
print("sample entry:", entry.to_json_dict())

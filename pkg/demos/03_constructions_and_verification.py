"""Build subspace codes and verify their claims independently.

Every construction returns a CodeSet whose size is checked against its
counting formula at build time; the verification layer then recomputes the
minimum subspace distance from pairwise intersections without reusing any
construction reasoning.  Run: python demos/03_constructions_and_verification.py
"""

import json

from cdcodes import (
    bound_multiblock,
    grassmannian_code,
    lifted_mrd_code,
    min_distance_exhaustive,
    multiblock_parallel_mrd,
    parallel_linkage,
    validate_codeset,
)

# Lifted MRD code: row spaces of (I | A), 16 planes of GF(2)^4, distance 2.
lifted = lifted_mrd_code(2, 2, 1)
dist, witness = min_distance_exhaustive(lifted)
print(f"{lifted}: exhaustive min distance {dist}")

# Two blocks with the identity in either position: 2^12 + 525 = 4621
# subspaces of GF(2)^8 at distance 4, matching the bound formula exactly.
code = multiblock_parallel_mrd(2, 4, 2, 1)
print(f"\n{code}")
print(f"size equals bound: {len(code) == bound_multiblock(2, 4, 2, 1).value}")
dist, witness = min_distance_exhaustive(code)
print(f"exhaustive min distance over {len(code) * (len(code) - 1) // 2} pairs: {dist}")
print("closest pair witness (bases):")
for s in witness:
    print(f"  {[list(r) for r in s.basis]}")

# Parallel linkage on ambient 3k: 571 planes of GF(2)^6 at distance 2,
# against the Grassmannian ceiling of 651.
v = grassmannian_code(2, 4, 2)
linked = parallel_linkage(2, 2, 0, 2, v)
print(f"\n{linked} (ceiling 651)")

# The validation report is machine-readable and JSON-serializable.
report = validate_codeset(linked)
print(json.dumps({"pass": report["pass"],
                  "checks": [c["check"] for c in report["checks"]]}, indent=2))

"""Checking algebraic laws, exhaustively or by seeded sampling."""

from morphocat import GroundSet, Sampled, check_all, check_law, make_lattice, relation_se
from morphocat.fixtures import all_fixtures

for name, (lat, b) in all_fixtures().items():
    reports = check_all(b, Sampled(100, seed=1))
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print(f"{name:22s} {counts}")

# Duality with the same element needs symmetry. An asymmetric relation on
# two points gives a concrete witness.
pair = make_lattice(GroundSet([0, 1]))
asym = relation_se(pair, [(0, 0), (0, 1), (1, 1)])
r = check_law(asym, "boolean-duality")
print(r.status, r.witness)
r = check_law(asym, "classical-duality")
print("with the transposed element:", r.status)

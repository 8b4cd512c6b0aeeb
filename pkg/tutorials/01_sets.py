"""Morphology on a finite set.

A set forgets nothing but its elements, so every subset is a substructure and
erosion/dilation reduce to the textbook relational operators.
"""

from morphocat import GroundSet, builtin_se, closing, dilate, erode, make_lattice, opening

S = make_lattice(GroundSet(range(5)))
print(S, "with", sum(1 for _ in S.enumerate_subobjects()), "subsets")

# b(x) = {x-1, x, x+1}, a one-dimensional line element
b = builtin_se(S, "translation", offsets=[-1, 0, 1])
d = S.make(elements=[1, 2, 3])

print("d          ", sorted(d.elements))
print("erode(d)   ", sorted(erode(b, d).elements))
print("dilate(d)  ", sorted(dilate(b, d).elements))
print("open(d)    ", sorted(opening(b, d).elements))
print("close(d)   ", sorted(closing(b, d).elements))

# adjunction: dilate(x) <= y  iff  x <= erode(y), checked over all 32 x 32 pairs
objs = list(S.enumerate_subobjects())
assert all(S.leq(dilate(b, x), y) == S.leq(x, erode(b, y)) for x in objs for y in objs)
print("adjunction holds on all", len(objs) ** 2, "pairs")

# Heyting structure: on a powerset the exponential is the usual (not c) or d
c = S.make(elements=[0, 1])
print("exponential d^c", sorted(S.exponential(d, c).elements), "boolean:", S.is_boolean())

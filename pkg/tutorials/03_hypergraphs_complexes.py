"""Hypergraphs and simplicial complexes."""

from morphocat import (
    Hypergraph,
    SimplicialComplex,
    builtin_se,
    dilate,
    dilate_closed_form,
    erode,
    make_lattice,
    opening,
)

h = Hypergraph([1, 2, 3, 4], {"e1": [1, 2], "e2": [2, 3], "e3": [3, 4]})
H = make_lattice(h, "vertex")
star = builtin_se(H, "hyperedge-star")
d = H.make(vertices=[1, 4])
print("generic dilate({1,4})    ", dilate(star, d))
print("closed-form dilate({1,4})", dilate_closed_form(star, d))

He = make_lattice(h, "hyperedge")
ov = builtin_se(He, "hyperedge-overlap")
e1 = He.make(vertices=[1, 2], hyperedges=["e1"])
print("overlap dilation of e1", dilate(ov, e1))

# A filled triangle: 19 subcomplexes, star-closure on vertices.
tri = SimplicialComplex.closed("abc", ["abc"])
T = make_lattice(tri, "vertex")
sc = builtin_se(T, "star-closure")
print(T, "has", sum(1 for _ in T.enumerate_subobjects()), "subcomplexes")
a = T.make(vertices="a")
print("dilate(a)  ", dilate(sc, a))
print("erode(top) ", erode(sc, T.top))
print("open(top)  ", opening(sc, T.top))

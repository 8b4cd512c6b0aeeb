"""Graphs, under both ways of forgetting.

Forgetting vertices gives subgraphs whose edges drag their endpoints along.
Forgetting edges treats edges as the carrier and vertices as their faces.
"""

from morphocat import (
    Graph,
    builtin_se,
    compare_methods,
    dilate,
    dilate_closed_form,
    erode,
    erode_closed_form,
    erode_paper_algorithm,
    is_covered,
    make_lattice,
)
from morphocat.dot import to_dot

p4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
V = make_lattice(p4, "vertex")
print(V, "has", sum(1 for _ in V.enumerate_subobjects()), "subgraphs")

b = builtin_se(V, "closed-neighborhood")
d = V.make(vertices="b")
print("dilate({b}) =", dilate(b, d))
print("erode(top)  =", erode(b, V.top))

# The structure-specific formulas agree with the generic erosion here, but
# dilation by induced edges overshoots on {a, d}.
ad = V.make(vertices="ad")
print("generic dilate({a,d})    ", dilate(b, ad))
print("closed-form dilate({a,d})", dilate_closed_form(b, ad))

# P6: the greedy procedure loses the edge x-y that the exact erosion keeps.
path = ["u", "z", "x", "y", "w", "s"]
P = make_lattice(Graph(path, list(zip(path, path[1:]))), "vertex")
b6 = builtin_se(P, "closed-neighborhood")
zxyw = P.make(vertices="zxyw", edges=[("x", "z"), ("x", "y"), ("w", "y")])
print("exact erosion     ", erode(b6, zxyw))
print("greedy procedure  ", erode_paper_algorithm(b6, zxyw))
print("all methods agree?", compare_methods(b6, zxyw, "erode").agree)

# Edge-forget: edges are the carrier, so an edge-neighbourhood element does
# not cover isolated vertices and erosion may exceed its argument.
E = make_lattice(p4, "edge")
be = builtin_se(E, "edge-neighborhood")
x = E.make(vertices="abcd", edges=[("a", "b"), ("b", "c")])
print("covered:", is_covered(be))
print("edge erosion generic    ", erode(be, x))
print("edge erosion closed form", erode_closed_form(be, x))

print(to_dot(dilate(b, d), baseline=d))

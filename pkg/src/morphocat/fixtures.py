"""Small named instances used by tests, tutorials and the CLI examples."""

from __future__ import annotations

from .lattice import MorphoLattice
from .structures import GroundSet, Graph, Hypergraph, SimplicialComplex, builtin_se, make_lattice
from .structuring import StructuringElement


def fix_set() -> tuple[MorphoLattice, StructuringElement]:
    """S = {0..4} with the line element b(x) = {x-1, x, x+1} & S."""
    lat = make_lattice(GroundSet(range(5)))
    return lat, builtin_se(lat, "translation", offsets=[-1, 0, 1])


def p4() -> Graph:
    return Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


def fix_p4(forget: str = "vertex") -> tuple[MorphoLattice, StructuringElement]:
    lat = make_lattice(p4(), forget)
    name = "closed-neighborhood" if forget == "vertex" else "edge-neighborhood"
    return lat, builtin_se(lat, name)


def p6() -> Graph:
    path = ["u", "z", "x", "y", "w", "s"]
    return Graph(path, list(zip(path, path[1:])))


def fix_p6() -> tuple[MorphoLattice, StructuringElement]:
    lat = make_lattice(p6(), "vertex")
    return lat, builtin_se(lat, "closed-neighborhood")


def hypergraph() -> Hypergraph:
    return Hypergraph([1, 2, 3, 4], {"e1": [1, 2], "e2": [2, 3], "e3": [3, 4]})


def fix_hypergraph(forget: str = "vertex") -> tuple[MorphoLattice, StructuringElement]:
    lat = make_lattice(hypergraph(), forget)
    name = "hyperedge-star" if forget == "vertex" else "hyperedge-overlap"
    return lat, builtin_se(lat, name)


def triangle() -> SimplicialComplex:
    return SimplicialComplex.closed("abc", ["abc"])


def fix_triangle() -> tuple[MorphoLattice, StructuringElement]:
    lat = make_lattice(triangle(), "vertex")
    return lat, builtin_se(lat, "star-closure")


KRIPKE_WORLDS = ("q0", "q1")
KRIPKE_RELATION = (("q0", "q0"), ("q0", "q1"), ("q1", "q1"))


def all_fixtures() -> dict[str, tuple[MorphoLattice, StructuringElement]]:
    return {
        "set": fix_set(),
        "p4-vertex": fix_p4("vertex"),
        "p4-edge": fix_p4("edge"),
        "p6-vertex": fix_p6(),
        "hypergraph-vertex": fix_hypergraph("vertex"),
        "hypergraph-hyperedge": fix_hypergraph("hyperedge"),
        "triangle": fix_triangle(),
    }

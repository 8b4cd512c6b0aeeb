"""Mathematical morphology on finite lattices of substructures.

Sets, graphs, hypergraphs and simplicial complexes are all handled through one
bitmask representation (see :mod:`morphocat.lattice`).  Erosion and dilation
by a structuring element live in :mod:`morphocat.morphology`, the law harness
in :mod:`morphocat.laws` and the modal logic in :mod:`morphocat.logic`.
"""

from .errors import (
    CapabilityError,
    InputError,
    MorphoError,
    NoAtoms,
    NoClosedForm,
    NotASubobject,
    NotCovered,
    TooLarge,
)
from .lattice import Cell, MorphoLattice, SubStructure
from .laws import LAWS, Exhaustive, LawReport, Sampled, check_all, check_law
from .morphology import (
    MethodComparison,
    closing,
    compare_methods,
    dilate,
    erode,
    erode_paper_algorithm,
    opening,
)
from .structures import (
    GroundSet,
    Graph,
    Hypergraph,
    SimplicialComplex,
    builtin_se,
    dilate_closed_form,
    erode_closed_form,
    make_lattice,
    validate_subobject,
)
from .structuring import (
    StructuringElement,
    covers,
    empty_se,
    full_se,
    is_covered,
    relation_se,
    se_compose,
    se_identity,
    se_inf,
    se_leq,
    se_sup,
    se_transpose,
)

__version__ = "0.1.0"

"""Structuring elements and their algebra.

A structuring element maps every carrier element of the top object to a
substructure.  Pointwise order makes them a complete lattice; ``compose``
(the star product) makes them a monoid with :func:`se_identity` as unit
whenever the lattice has atoms.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .errors import GroundMismatch, UnknownElement, UnsupportedStructure
from .lattice import MorphoLattice, SubStructure, iter_bits


class StructuringElement:
    """Total map from carrier elements of ``lattice.top`` to substructures.

    ``name`` records which builtin produced it (closed-form operators key on
    it).  ``claims_cover`` is advisory only; :func:`is_covered` never trusts it.
    """

    def __init__(
        self,
        lattice: MorphoLattice,
        table: Mapping[object, SubStructure],
        name: str | None = None,
        claims_cover: bool = False,
    ):
        self.lattice = lattice
        self.name = name
        self.claims_cover = claims_cover
        images: dict[int, int] = {}
        for x, d in table.items():
            images[lattice.cell_index(x)] = lattice._mask(d)
        missing = [lattice.layout.cells[i].id for i in iter_bits(lattice.carrier_mask) if i not in images]
        if missing:
            raise UnknownElement(f"structuring element undefined on {sorted(missing)}")
        self._img = images

    @classmethod
    def _from_masks(cls, lattice, images: dict[int, int], name=None) -> "StructuringElement":
        self = cls.__new__(cls)
        self.lattice = lattice
        self.name = name
        self.claims_cover = False
        self._img = images
        return self

    @classmethod
    def from_function(cls, lattice: MorphoLattice, f: Callable[[str], SubStructure], name=None):
        return cls(lattice, {x: f(x) for x in lattice.carrier_ids}, name=name)

    def __call__(self, x) -> SubStructure:
        return self.lattice.sub(self._img[self.lattice.cell_index(x)])

    @property
    def table(self) -> dict[str, SubStructure]:
        cells = self.lattice.layout.cells
        return {cells[i].id: self.lattice.sub(m) for i, m in sorted(self._img.items())}

    def image_mask(self, i: int) -> int:
        return self._img[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StructuringElement)
            and self.lattice == other.lattice
            and self._img == other._img
        )

    def __hash__(self) -> int:
        return hash((self.lattice, tuple(sorted(self._img.items()))))

    def __repr__(self) -> str:
        label = self.name or "table"
        return f"<StructuringElement {label} on {self.lattice.ground.type_name}/{self.lattice.forget}>"


def _same_lattice(ses: Sequence[StructuringElement]) -> MorphoLattice:
    lat = ses[0].lattice
    for b in ses[1:]:
        if b.lattice != lat:
            raise GroundMismatch("structuring elements live on different lattices")
    return lat


def full_se(lattice: MorphoLattice) -> StructuringElement:
    top = lattice.layout.full
    return StructuringElement._from_masks(lattice, {i: top for i in iter_bits(lattice.carrier_mask)}, "full")


def empty_se(lattice: MorphoLattice) -> StructuringElement:
    return StructuringElement._from_masks(lattice, {i: 0 for i in iter_bits(lattice.carrier_mask)}, "empty")


def se_identity(lattice: MorphoLattice) -> StructuringElement:
    """``x -> atom_of(x)``; raises NoAtoms when some atom is missing."""
    images = {i: lattice.atom_of(lattice.layout.cells[i]).mask for i in iter_bits(lattice.carrier_mask)}
    return StructuringElement._from_masks(lattice, images, "identity")


def se_leq(b: StructuringElement, b2: StructuringElement) -> bool:
    _same_lattice([b, b2])
    return all(m & ~b2._img[i] == 0 for i, m in b._img.items())


def se_sup(ses: Iterable[StructuringElement], lattice: MorphoLattice | None = None) -> StructuringElement:
    ses = list(ses)
    if not ses:
        if lattice is None:
            raise ValueError("lattice required for the empty join")
        return empty_se(lattice)
    lat = _same_lattice(ses)
    images = {i: 0 for i in iter_bits(lat.carrier_mask)}
    for b in ses:
        for i, m in b._img.items():
            images[i] |= m
    return StructuringElement._from_masks(lat, images)


def se_inf(ses: Iterable[StructuringElement], lattice: MorphoLattice | None = None) -> StructuringElement:
    ses = list(ses)
    if not ses:
        if lattice is None:
            raise ValueError("lattice required for the empty meet")
        return full_se(lattice)
    lat = _same_lattice(ses)
    full = lat.layout.full
    images = {i: full for i in iter_bits(lat.carrier_mask)}
    for b in ses:
        for i, m in b._img.items():
            images[i] &= m
    return StructuringElement._from_masks(lat, images)


def se_compose(b: StructuringElement, b2: StructuringElement) -> StructuringElement:
    """Star product: ``x -> join of b2(y) over y in carrier(b(x))``."""
    lat = _same_lattice([b, b2])
    cm = lat.carrier_mask
    img2 = b2._img
    images = {}
    for i, m in b._img.items():
        out = 0
        for j in iter_bits(m & cm):
            out |= img2[j]
        images[i] = out
    return StructuringElement._from_masks(lat, images)


def dilation_mask(b: StructuringElement, mask: int) -> int:
    out = 0
    img = b._img
    for j in iter_bits(mask & b.lattice.carrier_mask):
        out |= img[j]
    return out


def covers(b: StructuringElement, d: SubStructure) -> bool:
    """``d`` lies below the join of ``b`` over its own carrier."""
    m = b.lattice._mask(d)
    return m & ~dilation_mask(b, m) == 0


def is_covered(b: StructuringElement, method: str = "auto") -> bool:
    """Whether every substructure is covered by ``b``.

    ``auto`` checks only the principal down-sets (the closure of each single
    cell); a union of covered objects is covered because the right-hand side
    grows with the carrier, so this is exact.  ``enumerate`` checks every
    substructure and is kept as a reference.
    """
    lat = b.lattice
    if method == "auto":
        return all(dn & ~dilation_mask(b, dn) == 0 for dn in lat.layout.down)
    if method == "enumerate":
        return all(covers(b, d) for d in lat.enumerate_subobjects())
    raise ValueError(f"unknown method {method!r}")


def _require_powerset(lattice: MorphoLattice) -> None:
    if lattice.ground.type_name != "set":
        raise UnsupportedStructure("only defined on powerset lattices")


def relation_se(lattice: MorphoLattice, pairs: Iterable[tuple[object, object]], name="relation") -> StructuringElement:
    """``b(x) = {y | (x, y) in pairs}`` on a powerset lattice."""
    _require_powerset(lattice)
    images = {i: 0 for i in iter_bits(lattice.carrier_mask)}
    for x, y in pairs:
        images[lattice.cell_index(x)] |= 1 << lattice.cell_index(y)
    return StructuringElement._from_masks(lattice, images, name)


def se_pairs(b: StructuringElement) -> list[tuple[str, str]]:
    _require_powerset(b.lattice)
    cells = b.lattice.layout.cells
    return [(cells[i].id, cells[j].id) for i, m in sorted(b._img.items()) for j in iter_bits(m)]


def se_transpose(b: StructuringElement) -> StructuringElement:
    """``x -> {y | x in b(y)}`` (powerset lattices only)."""
    lat = b.lattice
    _require_powerset(lat)
    images = {i: 0 for i in iter_bits(lat.carrier_mask)}
    for i, m in b._img.items():
        for j in iter_bits(m):
            images[j] |= 1 << i
    return StructuringElement._from_masks(lat, images)

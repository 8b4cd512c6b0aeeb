"""Finite lattices of substructures.

Every ground object handled here (a set, a graph, a hypergraph, a simplicial
complex) is presented as a finite poset of *cells*: elements, vertices, edges,
hyperedges, faces.  A cell sits above the cells it needs (an edge above its
endpoints, a face above its proper faces).  Substructures are exactly the
down-closed sets of cells, ordered by inclusion, so joins and meets are union
and intersection.  Internally a substructure is an ``int`` bitmask over the
ground's canonical cell ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    GroundMismatch,
    NoAtoms,
    TooLarge,
    UnknownElement,
    UnsupportedForgetMode,
)

DEFAULT_ENUMERATION_LIMIT = 2**20


class Cell(NamedTuple):
    kind: str
    id: str


_NUM = re.compile(r"-?\d+")


def natural_key(s: str):
    """Sort key placing integer-like ids numerically before other ids."""
    if _NUM.fullmatch(s):
        return (0, int(s), s)
    return (1, 0, s)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Layout:
    """Canonical cell ordering of a ground object.

    Cells are sorted by (rank, natural id); ranks are chosen by the ground so
    that every cell comes after the cells it needs.
    """

    def __init__(self, entries: Iterable[tuple[Cell, int, Iterable[Cell]]]):
        entries = sorted(entries, key=lambda e: (e[1], e[0].kind, natural_key(e[0].id)))
        self.cells: tuple[Cell, ...] = tuple(e[0] for e in entries)
        self.index: dict[Cell, int] = {c: i for i, c in enumerate(self.cells)}
        down = []
        for i, (cell, _, lower) in enumerate(entries):
            m = 1 << i
            for low in lower:
                j = self.index[low]
                if j >= i:
                    raise AssertionError(f"cell {low} must precede {cell}")
                m |= down[j]
            down.append(m)
        self.down: tuple[int, ...] = tuple(down)
        self.full = (1 << len(self.cells)) - 1
        kind_masks: dict[str, int] = {}
        for i, c in enumerate(self.cells):
            kind_masks[c.kind] = kind_masks.get(c.kind, 0) | (1 << i)
        self.kind_masks = kind_masks

    def kind_mask(self, kind: str) -> int:
        return self.kind_masks.get(kind, 0)

    def ids(self, mask: int, kind: str) -> frozenset[str]:
        mask &= self.kind_mask(kind)
        return frozenset(self.cells[i].id for i in iter_bits(mask))

    def closure(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= self.down[i]
        return out

    def interior(self, mask: int) -> int:
        out = 0
        for i, d in enumerate(self.down):
            if d & ~mask == 0:
                out |= 1 << i
        return out


class Ground:
    """Base class for ground objects.

    Subclasses are frozen dataclasses and implement :meth:`_cell_entries`,
    :meth:`_mask_from_payload` and :meth:`payload`.
    """

    type_name = "abstract"
    forget_modes: tuple[str, ...] = ()

    def _cell_entries(self) -> Iterable[tuple[Cell, int, Iterable[Cell]]]:
        raise NotImplementedError

    @cached_property
    def layout(self) -> Layout:
        return Layout(self._cell_entries())

    def _mask_from_payload(self, payload: dict) -> int:
        raise NotImplementedError

    def payload(self, mask: int) -> dict:
        raise NotImplementedError

    def describe(self, mask: int) -> str:
        return repr(self.payload(mask))


@dataclass(frozen=True, eq=True, repr=False)
class SubStructure:
    """An immutable substructure of a ground object."""

    ground: Ground
    mask: int

    @property
    def cells(self) -> frozenset[Cell]:
        lay = self.ground.layout
        return frozenset(lay.cells[i] for i in iter_bits(self.mask))

    def ids(self, kind: str) -> frozenset[str]:
        return self.ground.layout.ids(self.mask, kind)

    @property
    def elements(self) -> frozenset[str]:
        return self.ids("element")

    @property
    def vertices(self) -> frozenset[str]:
        return self.ids("vertex")

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset(tuple(e) for e in self.payload().get("edges", ()))

    @property
    def hyperedges(self) -> frozenset[str]:
        return self.ids("hyperedge")

    @property
    def faces(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(f) for f in self.payload().get("faces", ()))

    def payload(self) -> dict:
        """JSON-ready dict mirroring the ground's shape."""
        return self.ground.payload(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __repr__(self) -> str:
        return f"<{self.ground.type_name} {self.ground.describe(self.mask)}>"


class MorphoLattice:
    """The lattice of substructures of ``ground`` with a chosen carrier.

    ``forget`` picks which kind of cell the forgetful functor keeps
    (``"element"`` for sets, ``"vertex"``/``"edge"`` for graphs, ...).
    """

    def __init__(self, ground: Ground, forget: str | None = None):
        if forget is None:
            forget = ground.forget_modes[0]
        if forget not in ground.forget_modes:
            raise UnsupportedForgetMode(
                f"{ground.type_name} supports forget modes {ground.forget_modes}, got {forget!r}"
            )
        self.ground = ground
        self.forget = forget
        self.layout = ground.layout
        self.carrier_mask = self.layout.kind_mask(forget)

    def __repr__(self) -> str:
        return f"MorphoLattice({self.ground.type_name}, forget={self.forget!r}, cells={len(self.layout.cells)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MorphoLattice)
            and self.forget == other.forget
            and self.ground == other.ground
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.forget))

    # construction ------------------------------------------------------

    def sub(self, mask: int) -> SubStructure:
        return SubStructure(self.ground, mask)

    def make(self, **payload) -> SubStructure:
        """Validate a structured payload, e.g. ``make(vertices=..., edges=...)``."""
        return self.sub(self.ground._mask_from_payload(payload))

    def _mask(self, d: SubStructure) -> int:
        if not isinstance(d, SubStructure):
            raise TypeError(f"expected SubStructure, got {type(d).__name__}")
        if d.ground is not self.ground and d.ground != self.ground:
            raise GroundMismatch("substructure belongs to a different ground")
        return d.mask

    # order and bounds --------------------------------------------------

    @property
    def top(self) -> SubStructure:
        return self.sub(self.layout.full)

    @property
    def bottom(self) -> SubStructure:
        return self.sub(0)

    def leq(self, a: SubStructure, b: SubStructure) -> bool:
        return self._mask(a) & ~self._mask(b) == 0

    def sup(self, family: Iterable[SubStructure]) -> SubStructure:
        m = 0
        for d in family:
            m |= self._mask(d)
        return self.sub(m)

    def inf(self, family: Iterable[SubStructure]) -> SubStructure:
        m = self.layout.full
        for d in family:
            m &= self._mask(d)
        return self.sub(m)

    def join(self, a: SubStructure, b: SubStructure) -> SubStructure:
        return self.sub(self._mask(a) | self._mask(b))

    def meet(self, a: SubStructure, b: SubStructure) -> SubStructure:
        return self.sub(self._mask(a) & self._mask(b))

    # carrier -----------------------------------------------------------

    def carrier(self, d: SubStructure) -> frozenset[str]:
        return self.layout.ids(self._mask(d), self.forget)

    @property
    def carrier_ids(self) -> tuple[str, ...]:
        """Carrier of the top element in canonical order."""
        lay = self.layout
        return tuple(lay.cells[i].id for i in iter_bits(self.carrier_mask))

    def cell_index(self, x) -> int:
        """Bit index of carrier element ``x`` (an id or a :class:`Cell`)."""
        cell = x if isinstance(x, Cell) else Cell(self.forget, str(x))
        try:
            i = self.layout.index[cell]
        except KeyError:
            raise UnknownElement(f"{cell.id!r} is not a {self.forget} of the ground") from None
        if cell.kind != self.forget:
            raise UnknownElement(f"{cell} is not in the carrier ({self.forget})")
        return i

    # Heyting structure -------------------------------------------------

    def exponential(self, d: SubStructure, c: SubStructure, method: str = "auto") -> SubStructure:
        """Relative pseudo-complement ``d^c``: the largest ``e`` with ``e & c <= d``."""
        dm, cm = self._mask(d), self._mask(c)
        if method == "auto":
            return self.sub(self._exp_mask(dm, cm))
        if method == "enumerate":
            m = 0
            for e in self._downsets():
                if e & cm & ~dm == 0:
                    m |= e
            return self.sub(m)
        raise ValueError(f"unknown method {method!r}")

    def _exp_mask(self, dm: int, cm: int) -> int:
        # largest down-set avoiding c \ d
        bad = cm & ~dm
        out = 0
        for i, dn in enumerate(self.layout.down):
            if dn & bad == 0:
                out |= 1 << i
        return out

    def complement(self, d: SubStructure) -> SubStructure:
        return self.sub(self._exp_mask(0, self._mask(d)))

    def is_boolean(self, method: str = "auto") -> bool:
        if method == "auto":
            # down-set lattices are Boolean iff no cell needs another one
            return all(dn == 1 << i for i, dn in enumerate(self.layout.down))
        if method == "enumerate":
            full = self.layout.full
            return all(m | self._exp_mask(0, m) == full for m in self._downsets())
        raise ValueError(f"unknown method {method!r}")

    # atoms -------------------------------------------------------------

    def atom_of(self, x) -> SubStructure:
        i = self.cell_index(x)
        m = self.layout.down[i]
        if m & self.carrier_mask != 1 << i:
            raise NoAtoms(f"no atom for {self.layout.cells[i]}: its closure has a larger carrier")
        return self.sub(m)

    def has_atoms(self) -> bool:
        down = self.layout.down
        return all(down[i] & self.carrier_mask == 1 << i for i in iter_bits(self.carrier_mask))

    def is_atomic(self) -> bool:
        """Every substructure is the join of the atoms over its carrier."""
        return self.has_atoms() and self.carrier_mask == self.layout.full

    # enumeration -------------------------------------------------------

    def count_subobjects(self, limit: int | None = None) -> int:
        """Number of substructures; stops early once ``limit`` is exceeded."""
        down = self.layout.down
        cap = None if limit is None else limit + 1

        @lru_cache(maxsize=None)
        def count(i: int, forced: int) -> int:
            if i < 0:
                return 1
            bit = 1 << i
            rest = (1 << i) - 1
            if forced & bit:
                return count(i - 1, forced & rest)
            n = count(i - 1, forced & rest)
            if cap is not None and n >= cap:
                return n
            return n + count(i - 1, (forced | down[i]) & rest)

        return count(len(down) - 1, 0)

    def _downsets(self) -> Iterator[int]:
        down = self.layout.down

        def rec(i: int, chosen: int, forced: int) -> Iterator[int]:
            if i < 0:
                yield chosen
                return
            bit = 1 << i
            if forced & bit:
                yield from rec(i - 1, chosen | bit, forced)
            else:
                yield from rec(i - 1, chosen, forced)
                yield from rec(i - 1, chosen | bit, forced | down[i])

        return rec(len(down) - 1, 0, 0)

    def enumerate_subobjects(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[SubStructure]:
        """Every substructure exactly once, in binary-counting order of the cell masks.

        Raises :class:`TooLarge` up front when there are more than ``limit``.
        """
        if len(self.layout.cells) > limit.bit_length() - 1:
            n = self.count_subobjects(limit)
            if n > limit:
                raise TooLarge(f"more than {limit} substructures")
        return (self.sub(m) for m in self._downsets())

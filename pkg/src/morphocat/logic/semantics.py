"""Denotational semantics of modal formulas over a morpho-lattice.

``[]`` is erosion and ``<>`` is dilation by the model's structuring element;
implication and negation are the Heyting exponential and complement.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import NotCovered, UnknownProposition, UnknownWorld
from ..lattice import MorphoLattice, SubStructure
from ..morphology import _erode_mask
from ..structures import GroundSet, make_lattice
from ..structuring import StructuringElement, dilation_mask, is_covered, relation_se
from .formula import And, Bot, Box, Diamond, Formula, Implies, Not, Or, Prop, Top


class Model:
    """A lattice, a structuring element and a valuation of propositions.

    Construction rejects a non-covering ``b`` unless ``unchecked`` is set.
    """

    def __init__(
        self,
        lattice: MorphoLattice,
        b: StructuringElement,
        valuation: Mapping[str, SubStructure] | None = None,
        unchecked: bool = False,
    ):
        if b.lattice != lattice:
            raise ValueError("structuring element belongs to another lattice")
        self.covered = is_covered(b)
        if not self.covered and not unchecked:
            raise NotCovered("the structuring element does not cover the lattice")
        self.lattice = lattice
        self.b = b
        self.unchecked = unchecked
        self._val = {str(k): lattice._mask(v) for k, v in (valuation or {}).items()}
        self._cache: dict[Formula, int] = {}

    @property
    def valuation(self) -> dict[str, SubStructure]:
        return {k: self.lattice.sub(m) for k, m in sorted(self._val.items())}

    def with_valuation(self, valuation: Mapping[str, SubStructure]) -> "Model":
        m = Model.__new__(Model)
        m.lattice, m.b, m.unchecked, m.covered = self.lattice, self.b, self.unchecked, self.covered
        m._val = {str(k): self.lattice._mask(v) for k, v in valuation.items()}
        m._cache = {}
        return m

    def _eval(self, f: Formula) -> int:
        hit = self._cache.get(f)
        if hit is not None:
            return hit
        lat = self.lattice
        if isinstance(f, Top):
            r = lat.layout.full
        elif isinstance(f, Bot):
            r = 0
        elif isinstance(f, Prop):
            if f.name not in self._val:
                raise UnknownProposition(f"no valuation for {f.name!r}")
            r = self._val[f.name]
        elif isinstance(f, Not):
            r = lat._exp_mask(0, self._eval(f.arg))
        elif isinstance(f, And):
            r = self._eval(f.left) & self._eval(f.right)
        elif isinstance(f, Or):
            r = self._eval(f.left) | self._eval(f.right)
        elif isinstance(f, Implies):
            r = lat._exp_mask(self._eval(f.right), self._eval(f.left))
        elif isinstance(f, Box):
            r = _erode_mask(self.b, self._eval(f.arg))
        elif isinstance(f, Diamond):
            r = dilation_mask(self.b, self._eval(f.arg))
        else:
            raise TypeError(f"not a formula: {f!r}")
        self._cache[f] = r
        return r


def evaluate(model: Model, f: Formula) -> SubStructure:
    return model.lattice.sub(model._eval(f))


def satisfies(model: Model, f: Formula) -> bool:
    return model._eval(f) == model.lattice.layout.full


def entails_on_models(models: Iterable[Model], premises: Iterable[Formula], f: Formula) -> bool:
    """Every listed model satisfying all premises satisfies ``f``."""
    premises = list(premises)
    return all(satisfies(m, f) for m in models if all(satisfies(m, g) for g in premises))


def kripke_to_model(
    worlds: Iterable,
    relation: Iterable[tuple[object, object]],
    valuation: Mapping[str, Iterable] | None = None,
    unchecked: bool = False,
) -> Model:
    """Powerset model over ``worlds`` with ``b(q)`` the successors of ``q``."""
    worlds = [str(w) for w in worlds]
    known = set(worlds)
    pairs = []
    for q, r in relation:
        q, r = str(q), str(r)
        for w in (q, r):
            if w not in known:
                raise UnknownWorld(f"{w!r} is not a world")
        pairs.append((q, r))
    lat = make_lattice(GroundSet(worlds))
    b = relation_se(lat, pairs)
    val = {}
    for p, ws in (valuation or {}).items():
        ws = [str(w) for w in ws]
        for w in ws:
            if w not in known:
                raise UnknownWorld(f"{w!r} is not a world")
        val[p] = lat.make(elements=ws)
    return Model(lat, b, val, unchecked=unchecked)

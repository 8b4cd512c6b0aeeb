"""Erosion, dilation and their composites.

``erode`` and ``dilate`` are the normative operators.  ``erode_paper_algorithm``
and the closed forms in :mod:`morphocat.structures` are alternatives whose
disagreements are reported by :func:`compare_methods`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapabilityError, NotCovered
from .lattice import SubStructure, iter_bits
from .structures import dilate_closed_form, erode_closed_form
from .structuring import StructuringElement, dilation_mask, is_covered


def dilate(b: StructuringElement, d: SubStructure) -> SubStructure:
    """Join of ``b(v)`` over the carrier of ``d``."""
    lat = b.lattice
    return lat.sub(dilation_mask(b, lat._mask(d)))


def _erode_mask(b: StructuringElement, dm: int) -> int:
    lat = b.lattice
    cm = lat.carrier_mask
    passing = 0
    for i in iter_bits(cm):
        if b.image_mask(i) & ~dm == 0:
            passing |= 1 << i
    # a cell belongs to some admissible object iff its own closure has a passing carrier
    out = 0
    for j, dn in enumerate(lat.layout.down):
        if dn & cm & ~passing == 0:
            out |= 1 << j
    return out


def erode(b: StructuringElement, d: SubStructure, method: str = "auto") -> SubStructure:
    """Join of every object whose carrier elements all have ``b(v) <= d``.

    ``auto`` computes it cell by cell; ``enumerate`` takes the join over the
    enumerated lattice and serves as the reference.
    """
    lat = b.lattice
    dm = lat._mask(d)
    if method == "auto":
        return lat.sub(_erode_mask(b, dm))
    if method == "enumerate":
        cm = lat.carrier_mask
        fits = {i for i in iter_bits(cm) if b.image_mask(i) & ~dm == 0}
        out = 0
        for e in lat.enumerate_subobjects():
            if all(i in fits for i in iter_bits(e.mask & cm)):
                out |= e.mask
        return lat.sub(out)
    raise ValueError(f"unknown method {method!r}")


def dilate_by_definition(b: StructuringElement, d: SubStructure) -> SubStructure:
    """Meet of every object containing ``b(v)`` for each ``v`` in the carrier of ``d`` (enumerates)."""
    lat = b.lattice
    need = dilation_mask(b, lat._mask(d))
    out = lat.layout.full
    for e in lat.enumerate_subobjects():
        if need & ~e.mask == 0:
            out &= e.mask
    return lat.sub(out)


def erode_by_adjoint(b: StructuringElement, e: SubStructure) -> SubStructure:
    """Join of every ``d`` with ``dilate(d) <= e`` (enumerates)."""
    lat = b.lattice
    em = lat._mask(e)
    out = 0
    for d in lat.enumerate_subobjects():
        if dilation_mask(b, d.mask) & ~em == 0:
            out |= d.mask
    return lat.sub(out)


def erode_paper_algorithm(b: StructuringElement, d: SubStructure, assume_covered: bool = False) -> SubStructure:
    """The greedy erosion procedure, step for step.

    Needs atoms (raises NoAtoms) and a covering ``b`` (raises NotCovered unless
    ``assume_covered``).  It can return less than :func:`erode`.
    """
    lat = b.lattice
    dm = lat._mask(d)
    for x in iter_bits(lat.carrier_mask):
        lat.atom_of(lat.layout.cells[x])  # raises NoAtoms
    if not assume_covered and not is_covered(b):
        raise NotCovered("the structuring element does not cover the lattice")
    cm = lat.carrier_mask
    down = lat.layout.down

    def ok(v: int) -> bool:
        return b.image_mask(v) & ~dm == 0

    s = [v for v in iter_bits(dm & cm) if ok(v)]
    out = 0
    for v in s:
        out |= down[v]
    for v in s:
        if all(ok(w) for w in iter_bits(b.image_mask(v) & cm)):
            out |= b.image_mask(v)
    return lat.sub(out)


def opening(b: StructuringElement, d: SubStructure) -> SubStructure:
    return dilate(b, erode(b, d))


def closing(b: StructuringElement, d: SubStructure) -> SubStructure:
    return erode(b, dilate(b, d))


# ---------------------------------------------------------------- method comparison


@dataclass
class MethodComparison:
    op: str
    object: SubStructure
    results: dict[str, SubStructure | None]
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def agreement(self) -> dict[tuple[str, str], bool | None]:
        out = {}
        for m1, m2 in combinations(self.results, 2):
            r1, r2 = self.results[m1], self.results[m2]
            out[(m1, m2)] = None if r1 is None or r2 is None else r1 == r2
        return out

    @property
    def agree(self) -> bool:
        return all(v is not False for v in self.agreement.values())

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "object": self.object.payload(),
            "results": {m: (r.payload() if r is not None else None) for m, r in self.results.items()},
            "agreement": [
                {"methods": [m1, m2], "equal": eq} for (m1, m2), eq in self.agreement.items()
            ],
            "notes": self.notes,
            "agree": self.agree,
        }


def compare_methods(b: StructuringElement, d: SubStructure, op: str = "erode") -> MethodComparison:
    """Run every applicable method for ``op`` on ``d``; unavailable ones are ``None``."""
    results: dict[str, SubStructure | None] = {}
    notes: dict[str, str] = {}
    if op == "erode":
        results["generic"] = erode(b, d)
        candidates = {
            "closed_form": lambda: erode_closed_form(b, d),
            "paper_algorithm": lambda: erode_paper_algorithm(b, d),
        }
    elif op == "dilate":
        results["generic"] = dilate(b, d)
        candidates = {"closed_form": lambda: dilate_closed_form(b, d)}
    else:
        raise ValueError(f"op must be 'erode' or 'dilate', got {op!r}")
    for name, fn in candidates.items():
        try:
            results[name] = fn()
        except (CapabilityError, NotCovered) as exc:
            results[name] = None
            notes[name] = f"n/a: {exc}"
    return MethodComparison(op, d, results, notes)


__all__ = [
    "MethodComparison",
    "closing",
    "compare_methods",
    "dilate",
    "dilate_by_definition",
    "erode",
    "erode_by_adjoint",
    "erode_paper_algorithm",
    "opening",
]

"""Check the algebraic laws of erosion/dilation on concrete instances.

A law is checked either exhaustively (every object, pair or small family of
the enumerated lattice) or on seeded random samples.  Every check returns a
:class:`LawReport`; failed preconditions are reported, not raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .errors import UnknownName
from .lattice import MorphoLattice, SubStructure
from .morphology import closing, dilate, erode, opening
from .structuring import StructuringElement, is_covered, se_transpose


@dataclass(frozen=True)
class Exhaustive:
    """Every object (or pair / family of up to ``max_family`` objects)."""

    max_family: int = 2

    def describe(self) -> dict:
        return {"kind": "exhaustive", "max_family": self.max_family}


@dataclass(frozen=True)
class Sampled:
    """``n`` seeded random draws; families have between 0 and ``max_family`` members."""

    n: int = 200
    seed: int = 0
    max_family: int = 4

    def describe(self) -> dict:
        return {"kind": "sampled", "n": self.n, "seed": self.seed, "max_family": self.max_family}


def random_subobject(lattice: MorphoLattice, rng: random.Random, p: float | None = None) -> SubStructure:
    """Independent coin flip per cell, then drop cells whose requirements were not drawn."""
    if p is None:
        p = rng.random()
    m = 0
    for i in range(len(lattice.layout.cells)):
        if rng.random() < p:
            m |= 1 << i
    return lattice.sub(lattice.layout.interior(m))


@dataclass
class LawReport:
    law: str
    instance: str
    holds: bool | None
    witness: dict | None
    samples: int
    seed: int | None
    note: str = ""

    @property
    def status(self) -> str:
        return {True: "holds", False: "fails", None: "precondition-unmet"}[self.holds]

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "instance": self.instance,
            "holds": self.holds,
            "status": self.status,
            "witness": self.witness,
            "samples": self.samples,
            "seed": self.seed,
            "note": self.note,
        }


# ---------------------------------------------------------------- law table
#
# Each law: (arity, precondition, check).  ``check`` receives the SE and a
# tuple of objects (or a list for families) and returns True or a witness dict
# of named objects.


def _w(**objs) -> dict:
    return {k: (v.payload() if isinstance(v, SubStructure) else [x.payload() for x in v]) for k, v in objs.items()}


def _adjunction(b, d, e):
    lat = b.lattice
    if lat.leq(d, erode(b, e)) == lat.leq(dilate(b, d), e):
        return True
    return _w(d=d, e=e, erosion_e=erode(b, e), dilation_d=dilate(b, d))


def _monotone(b, d, e):
    lat = b.lattice
    if not lat.leq(d, e):
        return True
    if lat.leq(erode(b, d), erode(b, e)) and lat.leq(dilate(b, d), dilate(b, e)):
        return True
    return _w(d=d, e=e)


def _commute_inf(b, family):
    lat = b.lattice
    lhs = erode(b, lat.inf(family))
    rhs = lat.inf(erode(b, d) for d in family)
    return True if lhs == rhs else _w(family=family, lhs=lhs, rhs=rhs)


def _commute_sup(b, family):
    lat = b.lattice
    lhs = dilate(b, lat.sup(family))
    rhs = lat.sup(dilate(b, d) for d in family)
    return True if lhs == rhs else _w(family=family, lhs=lhs, rhs=rhs)


def _preserve(b):
    lat = b.lattice
    et, db = erode(b, lat.top), dilate(b, lat.bottom)
    if et == lat.top and db == lat.bottom:
        return True
    return _w(erosion_top=et, dilation_bottom=db)


def _unary(pred: Callable) -> Callable:
    def check(b, d):
        res = pred(b, d)
        if res is True:
            return True
        return _w(d=d, **res)

    return check


def _closing_extensive(b, d):
    c = closing(b, d)
    return True if b.lattice.leq(d, c) else {"closing": c}


def _opening_antiextensive(b, d):
    o = opening(b, d)
    return True if b.lattice.leq(o, d) else {"opening": o}


def _eps_delta_eps(b, d):
    e = erode(b, d)
    r = erode(b, dilate(b, e))
    return True if r == e else {"erosion": e, "eps_delta_eps": r}


def _delta_eps_delta(b, d):
    e = dilate(b, d)
    r = dilate(b, erode(b, e))
    return True if r == e else {"dilation": e, "delta_eps_delta": r}


def _idempotent(b, d):
    o, c = opening(b, d), closing(b, d)
    oo, cc = opening(b, o), closing(b, c)
    if o == oo and c == cc:
        return True
    return {"opening": o, "opening_twice": oo, "closing": c, "closing_twice": cc}


def _cover_anti(b, d):
    e = erode(b, d)
    return True if b.lattice.leq(e, d) else {"erosion": e}


def _cover_ext(b, d):
    e = dilate(b, d)
    return True if b.lattice.leq(d, e) else {"dilation": e}


def _boolean_duality(b, d):
    lat = b.lattice
    lhs = erode(b, lat.complement(d))
    rhs = lat.complement(dilate(b, d))
    return True if lhs == rhs else {"erosion_of_complement": lhs, "complement_of_dilation": rhs}


def _classical_duality(b, d):
    lat = b.lattice
    lhs = erode(b, lat.complement(d))
    rhs = lat.complement(dilate(se_transpose(b), d))
    return True if lhs == rhs else {"erosion_of_complement": lhs, "complement_of_transposed_dilation": rhs}


def _need_cover(b) -> str | None:
    return None if is_covered(b) else "structuring element does not cover the lattice"


def _need_boolean_cover(b) -> str | None:
    if not b.lattice.is_boolean():
        return "lattice is not Boolean"
    return _need_cover(b)


def _need_powerset(b) -> str | None:
    return None if b.lattice.ground.type_name == "set" else "transpose needs a powerset lattice"


LAWS: dict[str, tuple[str, Callable | None, Callable]] = {
    "adjunction": ("pair", None, _adjunction),
    "monotone": ("ordered-pair", None, _monotone),
    "commute-inf": ("family", None, _commute_inf),
    "commute-sup": ("family", None, _commute_sup),
    "preserve": ("none", None, _preserve),
    "closing-extensive": ("one", None, _unary(_closing_extensive)),
    "opening-antiextensive": ("one", None, _unary(_opening_antiextensive)),
    "eps-delta-eps": ("one", None, _unary(_eps_delta_eps)),
    "delta-eps-delta": ("one", None, _unary(_delta_eps_delta)),
    "idempotent": ("one", None, _unary(_idempotent)),
    "cover-antiextensive": ("one", _need_cover, _unary(_cover_anti)),
    "cover-extensive": ("one", _need_cover, _unary(_cover_ext)),
    "boolean-duality": ("one", _need_boolean_cover, _unary(_boolean_duality)),
    "classical-duality": ("one", _need_powerset, _unary(_classical_duality)),
}


def _cases(lat: MorphoLattice, arity: str, sampler) -> Iterator[tuple]:
    if arity == "none":
        yield ()
        return
    if isinstance(sampler, Exhaustive):
        objs = list(lat.enumerate_subobjects())
        if arity == "one":
            for d in objs:
                yield (d,)
        elif arity in ("pair", "ordered-pair"):
            for d, e in product(objs, repeat=2):
                if arity == "pair" or lat.leq(d, e):
                    yield (d, e)
        else:
            for k in range(sampler.max_family + 1):
                for fam in product(objs, repeat=k):
                    yield (list(fam),)
        return
    rng = random.Random(sampler.seed)
    for _ in range(sampler.n):
        if arity == "one":
            yield (random_subobject(lat, rng),)
        elif arity == "pair":
            yield (random_subobject(lat, rng), random_subobject(lat, rng))
        elif arity == "ordered-pair":
            e = random_subobject(lat, rng)
            yield (lat.meet(random_subobject(lat, rng), e), e)
        else:
            k = rng.randint(0, sampler.max_family)
            yield ([random_subobject(lat, rng) for _ in range(k)],)


def describe_instance(b: StructuringElement) -> str:
    lat = b.lattice
    return f"{lat.ground.type_name}/{lat.forget}/{b.name or 'table'}"


def check_law(b: StructuringElement, law: str, sampler=None) -> LawReport:
    if law not in LAWS:
        raise UnknownName(f"unknown law {law!r}; known: {sorted(LAWS)}")
    sampler = sampler if sampler is not None else Exhaustive()
    arity, pre, check = LAWS[law]
    seed = getattr(sampler, "seed", None)
    inst = describe_instance(b)
    if pre is not None:
        why = pre(b)
        if why is not None:
            return LawReport(law, inst, None, None, 0, seed, f"precondition unmet: {why}")
    n = 0
    for case in _cases(b.lattice, arity, sampler):
        n += 1
        res = check(b, *case)
        if res is not True:
            return LawReport(law, inst, False, res, n, seed)
    return LawReport(law, inst, True, None, n, seed)


def check_all(b: StructuringElement, sampler=None, laws=None) -> list[LawReport]:
    return [check_law(b, law, sampler) for law in (laws or LAWS)]

"""Axiom schemas, schema matching and semantic validation of axiom suites.

Schemas are formulas over the metavariables ``A``, ``B``, ``C``.  Schemas
marked ``iff`` stand for two implications; an instance may be either of them
or their conjunction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import TooLarge, UnknownName, UnknownSchema
from ..laws import LawReport, random_subobject
from ..morphology import _erode_mask
from ..structuring import dilation_mask
from .formula import (
    BINARY,
    UNARY,
    And,
    Bot,
    Box,
    Diamond,
    Formula,
    Implies,
    Not,
    Or,
    Prop,
    Top,
    parse_formula,
    print_formula,
    props,
    substitute,
)
from .semantics import Model, satisfies

METAVARS = ("A", "B", "C")


@dataclass(frozen=True)
class Schema:
    id: str
    formula: Formula
    iff: bool = False
    needs_cover: bool = False

    @property
    def text(self) -> str:
        if self.iff:
            return f"{print_formula(self.formula.left)} <-> {print_formula(self.formula.right)}"
        return print_formula(self.formula)

    def forms(self) -> list[Formula]:
        """The formulas an instance may have the shape of."""
        if not self.iff:
            return [self.formula]
        left, right = self.formula.left, self.formula.right
        return [Implies(left, right), Implies(right, left), And(Implies(left, right), Implies(right, left))]


def _s(id: str, text: str, needs_cover: bool = False) -> Schema:
    if "<->" in text:
        lhs, rhs = text.split("<->")
        f = Implies(parse_formula(lhs), parse_formula(rhs))
        return Schema(id, f, iff=True, needs_cover=needs_cover)
    return Schema(id, parse_formula(text), needs_cover=needs_cover)


INTUITIONISTIC = [
    _s("imp-k", "A -> B -> A"),
    _s("imp-s", "(A -> B -> C) -> (A -> B) -> A -> C"),
    _s("and-elim-l", "A & B -> A"),
    _s("and-elim-r", "A & B -> B"),
    _s("and-intro", "A -> B -> A & B"),
    _s("or-intro-l", "A -> A | B"),
    _s("or-intro-r", "B -> A | B"),
    _s("or-elim", "(A -> C) -> (B -> C) -> A | B -> C"),
    _s("ex-falso", "F -> A"),
    _s("top-intro", "T"),
    _s("neg-intro", "(A -> F) -> !A"),
    _s("neg-elim", "!A -> A -> F"),
    _s("imp-compose", "(A -> B) -> (B -> C) -> A -> C"),
]

MODAL = [
    _s("box-top", "[]T <-> T"),
    _s("dia-bot", "<>F <-> F"),
    _s("box-and", "[](A & B) <-> []A & []B"),
    _s("dia-or", "<>(A | B) <-> <>A | <>B"),
    _s("box-t", "[]A -> A", needs_cover=True),
    _s("dia-box", "<>[]A -> A"),
    _s("dia-t", "A -> <>A", needs_cover=True),
    _s("box-dia", "A -> []<>A"),
]

EXTENSIONS = {
    "s4": _s("s4", "[]A -> [][]A"),
    "b": _s("b", "A -> []<>A"),
    "s5": _s("s5", "<>A -> []<>A"),
    "duality": _s("duality", "![]A <-> <>!A"),
    "excluded-middle": _s("excluded-middle", "A | !A"),
}

REGISTRY: dict[str, Schema] = {s.id: s for s in INTUITIONISTIC + MODAL + list(EXTENSIONS.values())}

_BASE = [s.id for s in INTUITIONISTIC + MODAL]
PROFILES: dict[str, list[str]] = {
    "intuitionistic-base": _BASE,
    "boolean-classical": _BASE + ["excluded-middle", "duality"],
    "S4": _BASE + ["s4"],
    "B": _BASE + ["b"],
    "S5": _BASE + ["s5"],
}
# extensions that only make sense on Boolean lattices
_BOOLEAN_ONLY = {"excluded-middle", "duality"}


def get_schema(schema_id: str) -> Schema:
    try:
        return REGISTRY[schema_id]
    except KeyError:
        raise UnknownSchema(f"unknown axiom schema {schema_id!r}") from None


def profile_schemas(profile: str) -> list[Schema]:
    if profile not in PROFILES:
        raise UnknownName(f"unknown profile {profile!r}; known: {sorted(PROFILES)}")
    return [REGISTRY[i] for i in PROFILES[profile]]


def _unify(pattern: Formula, f: Formula, sub: dict[str, Formula]) -> bool:
    if isinstance(pattern, Prop) and pattern.name in METAVARS:
        bound = sub.get(pattern.name)
        if bound is None:
            sub[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is not type(f):
        return False
    if isinstance(pattern, UNARY):
        return _unify(pattern.arg, f.arg, sub)
    if isinstance(pattern, BINARY):
        return _unify(pattern.left, f.left, sub) and _unify(pattern.right, f.right, sub)
    return pattern == f


def match_axiom(schema_id: str, f: Formula) -> dict[str, Formula] | None:
    """Most general substitution making ``f`` an instance, or ``None``."""
    schema = get_schema(schema_id)
    for form in schema.forms():
        sub: dict[str, Formula] = {}
        if _unify(form, f, sub):
            return sub
    return None


def matching_schemas(f: Formula, profile: str = "intuitionistic-base") -> list[str]:
    return [s.id for s in profile_schemas(profile) if match_axiom(s.id, f) is not None]


def instantiate(schema: Schema, sub: dict[str, Formula]) -> Formula:
    return substitute(schema.formula if not schema.iff else schema.forms()[2], sub)


# ---------------------------------------------------------------- semantic validation


class _Tables:
    """Operation tables over the enumerated substructures of a model.

    Substructures are numbered; every connective becomes an array lookup so a
    formula is evaluated on all valuations at once.
    """

    def __init__(self, model: Model, objs: list):
        lat = model.lattice
        masks = [d.mask for d in objs]
        index = {m: i for i, m in enumerate(masks)}
        n = len(masks)
        self.n = n
        self.objs = objs
        self.top = index[lat.layout.full]
        self.bot = index[0]
        self.box = np.array([index[_erode_mask(model.b, m)] for m in masks], dtype=np.int64)
        self.dia = np.array([index[dilation_mask(model.b, m)] for m in masks], dtype=np.int64)
        self.meet = np.empty((n, n), dtype=np.int64)
        self.join = np.empty((n, n), dtype=np.int64)
        self.exp = np.empty((n, n), dtype=np.int64)  # exp[c, d] = d^c
        for i, a in enumerate(masks):
            for j, c in enumerate(masks):
                self.meet[i, j] = index[a & c]
                self.join[i, j] = index[a | c]
                self.exp[i, j] = index[lat._exp_mask(c, a)]

    def eval(self, f: Formula, env: dict[str, np.ndarray], size: int) -> np.ndarray:
        if isinstance(f, Top):
            return np.full(size, self.top)
        if isinstance(f, Bot):
            return np.full(size, self.bot)
        if isinstance(f, Prop):
            return env[f.name]
        if isinstance(f, Not):
            return self.exp[self.eval(f.arg, env, size), self.bot]
        if isinstance(f, Box):
            return self.box[self.eval(f.arg, env, size)]
        if isinstance(f, Diamond):
            return self.dia[self.eval(f.arg, env, size)]
        left, right = self.eval(f.left, env, size), self.eval(f.right, env, size)
        if isinstance(f, And):
            return self.meet[left, right]
        if isinstance(f, Or):
            return self.join[left, right]
        return self.exp[left, right]


def _exhaustive_index(model: Model, atoms: tuple[str, ...], limit: int):
    """Tables and index arrays of every valuation, or ``None`` when too many."""
    lat = model.lattice
    try:
        n = lat.count_subobjects(limit)
        if n ** len(atoms) > limit:
            return None
        objs = list(lat.enumerate_subobjects(limit))
    except TooLarge:
        return None
    tables = _Tables(model, objs)
    grids = np.meshgrid(*[np.arange(n)] * len(atoms), indexing="ij")
    return tables, {a: g.ravel() for a, g in zip(atoms, grids)}


def _instances(schema: Schema, atoms: tuple[str, ...]):
    mvs = sorted(props(schema.formula) & set(METAVARS))
    for choice in product(atoms, repeat=len(mvs)):
        sub = {m: Prop(a) for m, a in zip(mvs, choice)}
        yield sub, instantiate(schema, sub)


def _witness(val: dict, sub: dict) -> dict:
    return {
        "valuation": {k: v.payload() for k, v in val.items()},
        "substitution": {k: str(v) for k, v in sub.items()},
    }


def validate_axiom_suite(
    model: Model,
    profile: str = "intuitionistic-base",
    atoms: tuple[str, ...] = ("p", "q"),
    limit: int = 2**16,
    samples: int = 500,
    seed: int = 0,
) -> list[LawReport]:
    """Check every schema of ``profile`` on ``model``.

    Metavariables are instantiated with every map into ``atoms``; the atoms
    range over all valuations, or over ``samples`` seeded random ones when
    there are more than ``limit``.
    """
    schemas = profile_schemas(profile)
    boolean = model.lattice.is_boolean()
    inst = f"{model.lattice.ground.type_name}/{model.lattice.forget}/{model.b.name or 'table'}/{profile}"
    exhaustive = _exhaustive_index(model, atoms, limit)
    if exhaustive is None:
        rng = random.Random(seed)
        vals = [{a: random_subobject(model.lattice, rng) for a in atoms} for _ in range(samples)]
        note = f"sampled {samples} valuations (seed {seed}); exhaustive enumeration too large"
    else:
        tables, env = exhaustive
        size = tables.n ** len(atoms)
        note = ""
    reports = []
    for schema in schemas:
        if schema.id in _BOOLEAN_ONLY and not boolean:
            reports.append(LawReport(schema.id, inst, None, None, 0, seed, "precondition unmet: lattice is not Boolean"))
            continue
        if schema.needs_cover and not model.covered:
            reports.append(LawReport(schema.id, inst, None, None, 0, seed, "precondition unmet: model is not covered"))
            continue
        formulas = list(_instances(schema, atoms))
        k = len(formulas)
        first = None  # (valuation number, instance number) of the earliest failure
        if exhaustive is not None:
            for s, (sub, f) in enumerate(formulas):
                bad = np.flatnonzero(tables.eval(f, env, size) != tables.top)
                if bad.size and (first is None or (bad[0], s) < first):
                    first = (int(bad[0]), s)
            if first is not None:
                v = first[0]
                val = {a: tables.objs[int(env[a][v])] for a in atoms}
            total = size * k
        else:
            for v, val in enumerate(vals):
                m = model.with_valuation(val)
                s = next((s for s, (_, f) in enumerate(formulas) if not satisfies(m, f)), None)
                if s is not None:
                    first = (v, s)
                    break
            total = len(vals) * k
        if first is None:
            reports.append(LawReport(schema.id, inst, True, None, total, seed, note))
        else:
            count = first[0] * k + first[1] + 1
            reports.append(LawReport(schema.id, inst, False, _witness(val, formulas[first[1]][0]), count, seed, note))
    return reports

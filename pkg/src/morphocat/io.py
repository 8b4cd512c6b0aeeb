"""JSON documents for grounds, subobjects, structuring elements, models and proofs.

Unknown fields are rejected everywhere.  Output is UTF-8 with sorted keys
and a trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import InputError
from .lattice import Ground, MorphoLattice, SubStructure
from .logic.formula import parse_formula
from .logic.proofs import Derivation, Line
from .logic.semantics import Model, kripke_to_model
from .structures import (
    GroundSet,
    Graph,
    Hypergraph,
    SimplicialComplex,
    builtin_se,
    make_lattice,
    validate_subobject,
)
from .structuring import StructuringElement, relation_se, se_pairs


def _fields(data: Any, what: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(data, Mapping):
        raise InputError(f"{what} must be a JSON object")
    extra = set(data) - required - set(optional)
    if extra:
        raise InputError(f"{what}: unknown fields {sorted(extra)}")
    missing = required - set(data)
    if missing:
        raise InputError(f"{what}: missing fields {sorted(missing)}")
    return dict(data)


def _list(x: Any, what: str) -> list:
    if not isinstance(x, list):
        raise InputError(f"{what} must be a JSON array")
    return x


# ---------------------------------------------------------------- files


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def save_json(obj: Any, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


# ---------------------------------------------------------------- grounds


def ground_from_json(data: Any) -> Ground:
    if not isinstance(data, Mapping) or "type" not in data:
        raise InputError("ground must be a JSON object with a 'type' field")
    kind = data["type"]
    if kind == "set":
        d = _fields(data, "set ground", {"type", "elements"})
        return GroundSet(_list(d["elements"], "elements"))
    if kind == "graph":
        d = _fields(data, "graph ground", {"type", "vertices", "edges"}, {"directed"})
        edges = _list(d["edges"], "edges")
        for e in edges:
            if not isinstance(e, list) or len(e) != 2:
                raise InputError(f"edge {e!r} must be a pair [u, v]")
        return Graph(_list(d["vertices"], "vertices"), edges, bool(d.get("directed", False)))
    if kind == "hypergraph":
        d = _fields(data, "hypergraph ground", {"type", "vertices", "hyperedges"})
        hes = d["hyperedges"]
        if not isinstance(hes, Mapping):
            raise InputError("hyperedges must map names to vertex lists")
        return Hypergraph(_list(d["vertices"], "vertices"), {k: _list(v, f"hyperedge {k}") for k, v in hes.items()})
    if kind == "complex":
        d = _fields(data, "complex ground", {"type", "vertices", "faces"}, {"auto_close"})
        faces = [_list(f, "face") for f in _list(d["faces"], "faces")]
        if d.get("auto_close", False):
            return SimplicialComplex.closed(_list(d["vertices"], "vertices"), faces)
        return SimplicialComplex(_list(d["vertices"], "vertices"), faces)
    raise InputError(f"unknown ground type {kind!r}")


def ground_to_json(g: Ground) -> dict:
    full = g.layout.full
    out = {"type": g.type_name, **g.payload(full)}
    if isinstance(g, Graph):
        out["directed"] = g.directed
    return out


def subobject_from_json(lattice: MorphoLattice, data: Any) -> SubStructure:
    if not isinstance(data, Mapping):
        raise InputError("subobject must be a JSON object")
    return validate_subobject(lattice, data)


def subobject_to_json(d: SubStructure) -> dict:
    return d.payload()


# ---------------------------------------------------------------- structuring elements


def se_from_json(lattice: MorphoLattice, data: Any) -> StructuringElement:
    if not isinstance(data, Mapping) or "kind" not in data:
        raise InputError("structuring element must be a JSON object with a 'kind' field")
    kind = data["kind"]
    if kind == "builtin":
        d = _fields(data, "builtin structuring element", {"kind", "name"}, {"offsets", "pairs"})
        params = {k: d[k] for k in ("offsets", "pairs") if k in d}
        return builtin_se(lattice, d["name"], **params)
    if kind == "relation":
        d = _fields(data, "relation structuring element", {"kind", "pairs"})
        pairs = _list(d["pairs"], "pairs")
        for p in pairs:
            if not isinstance(p, list) or len(p) != 2:
                raise InputError(f"pair {p!r} must be [x, y]")
        return relation_se(lattice, pairs)
    if kind == "table":
        d = _fields(data, "table structuring element", {"kind", "map"})
        m = d["map"]
        if not isinstance(m, Mapping):
            raise InputError("map must be an object from carrier ids to subobjects")
        return StructuringElement(lattice, {x: subobject_from_json(lattice, v) for x, v in m.items()})
    raise InputError(f"unknown structuring element kind {kind!r}")


def se_to_json(b: StructuringElement) -> dict:
    if b.lattice.ground.type_name == "set":
        return {"kind": "relation", "pairs": [list(p) for p in se_pairs(b)]}
    return {"kind": "table", "map": {x: d.payload() for x, d in b.table.items()}}


# ---------------------------------------------------------------- models


def model_from_json(data: Any) -> Model:
    if not isinstance(data, Mapping):
        raise InputError("model must be a JSON object")
    if "kripke" in data:
        d = _fields(data, "model", {"kripke"}, {"unchecked"})
        k = _fields(d["kripke"], "kripke frame", {"worlds", "relation"}, {"valuation"})
        val = k.get("valuation", {})
        if not isinstance(val, Mapping):
            raise InputError("valuation must map proposition names to world lists")
        return kripke_to_model(
            _list(k["worlds"], "worlds"),
            [tuple(_list(p, "relation pair")) for p in _list(k["relation"], "relation")],
            {p: _list(ws, f"valuation of {p}") for p, ws in val.items()},
            unchecked=bool(d.get("unchecked", False)),
        )
    d = _fields(data, "model", {"ground", "se"}, {"forget", "valuation", "unchecked"})
    lat = make_lattice(ground_from_json(d["ground"]), d.get("forget"))
    b = se_from_json(lat, d["se"])
    val = d.get("valuation", {})
    if not isinstance(val, Mapping):
        raise InputError("valuation must map proposition names to subobjects")
    return Model(lat, b, {p: subobject_from_json(lat, v) for p, v in val.items()}, bool(d.get("unchecked", False)))


def model_to_json(model: Model) -> dict:
    out = {
        "ground": ground_to_json(model.lattice.ground),
        "forget": model.lattice.forget,
        "se": se_to_json(model.b),
        "valuation": {p: v.payload() for p, v in model.valuation.items()},
    }
    if model.unchecked:
        out["unchecked"] = True
    return out


# ---------------------------------------------------------------- proofs


def proof_from_json(data: Any) -> Derivation:
    d = _fields(data, "proof", {"lines"}, {"premises", "conclusion", "consequence", "profile"})
    lines = []
    for i, ln in enumerate(_list(d["lines"], "lines"), start=1):
        ln = _fields(ln, f"proof line {i}", {"formula", "rule"}, {"args"})
        lines.append(Line(parse_formula(ln["formula"]), ln["rule"], tuple(_list(ln.get("args", []), "args"))))
    concl = d.get("conclusion")
    return Derivation(
        tuple(lines),
        tuple(parse_formula(p) for p in _list(d.get("premises", []), "premises")),
        parse_formula(concl) if concl is not None else None,
        d.get("consequence", "local"),
        d.get("profile", "intuitionistic-base"),
    )


def proof_to_json(d: Derivation) -> dict:
    return d.to_json()

import json
from pathlib import Path

import pytest

from morphocat.errors import InputError, NotASubobject
from morphocat.fixtures import all_fixtures
from morphocat.io import (
    dumps,
    ground_from_json,
    ground_to_json,
    load_json,
    model_from_json,
    model_to_json,
    proof_from_json,
    proof_to_json,
    save_json,
    se_from_json,
    se_to_json,
    subobject_from_json,
    subobject_to_json,
)
from morphocat.logic.proofs import BUNDLED
from morphocat.structures import make_lattice

DATA = Path(__file__).resolve().parent.parent / "tutorials" / "data"


@pytest.mark.parametrize("name", list(all_fixtures()))
def test_round_trips(name):
    lat, b = all_fixtures()[name]
    g = ground_from_json(ground_to_json(lat.ground))
    assert g == lat.ground
    lat2 = make_lattice(g, lat.forget)
    for d in lat.enumerate_subobjects():
        assert subobject_from_json(lat2, subobject_to_json(d)).mask == d.mask
    assert se_from_json(lat, se_to_json(b)) == b
    assert se_from_json(lat, json.loads(dumps(se_to_json(b)))) == b


def test_model_round_trip():
    m = model_from_json(load_json(DATA / "kripke.json"))
    again = model_from_json(json.loads(dumps(model_to_json(m))))
    assert again.valuation == {k: again.lattice.sub(v.mask) for k, v in m.valuation.items()}
    assert again.b.image_mask(0) == m.b.image_mask(0)
    g = model_from_json(load_json(DATA / "p4-model.json"))
    assert model_to_json(model_from_json(model_to_json(g))) == model_to_json(g)


def test_proof_round_trip():
    for build in BUNDLED.values():
        d = build()
        assert proof_from_json(json.loads(dumps(proof_to_json(d)))) == d
    assert proof_from_json(load_json(DATA / "proof-adjunction.json")) == BUNDLED["adjunction"]()


def test_every_data_file_loads():
    for path in sorted(DATA.glob("*.json")):
        data = load_json(path)
        assert isinstance(data, dict), path


@pytest.mark.parametrize(
    "data",
    [
        {"type": "set", "elements": [1], "colour": 1},
        {"type": "graph", "vertices": ["a"], "edges": [], "weights": {}},
        {"type": "graph", "vertices": ["a", "b"], "edges": [["a"]]},
        {"type": "polytope"},
        {"elements": [1]},
        [1, 2],
    ],
)
def test_bad_grounds(data):
    with pytest.raises(InputError):
        ground_from_json(data)


def test_bad_se_and_model():
    lat, _ = all_fixtures()["set"]
    for data in (
        {"kind": "builtin", "name": "full", "extra": 1},
        {"kind": "relation", "pairs": [[0]]},
        {"kind": "lookup"},
        {"kind": "table", "map": []},
    ):
        with pytest.raises(InputError):
            se_from_json(lat, data)
    with pytest.raises(InputError):
        model_from_json({"kripke": {"worlds": ["a"], "relation": [], "extra": 0}})
    with pytest.raises(InputError):
        proof_from_json({"lines": [{"formula": "p", "rule": "premise", "why": "x"}]})
    with pytest.raises(NotASubobject):
        subobject_from_json(lat, {"elements": [9]})


def test_output_format(tmp_path):
    p = tmp_path / "x.json"
    save_json({"b": 1, "a": "é"}, p)
    raw = p.read_bytes()
    assert raw == '{\n  "a": "é",\n  "b": 1\n}\n'.encode()
    with pytest.raises(InputError):
        load_json(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(InputError):
        load_json(tmp_path / "bad.json")

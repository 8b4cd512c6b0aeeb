import json
import random

import pytest

from morphocat import GroundSet, make_lattice
from morphocat.errors import UnknownName
from morphocat.fixtures import all_fixtures, fix_p4, fix_set
from morphocat.laws import LAWS, Exhaustive, Sampled, check_all, check_law, random_subobject
from morphocat.morphology import dilate, erode
from morphocat.structuring import relation_se, se_transpose

GENERIC = [
    "adjunction",
    "monotone",
    "commute-inf",
    "commute-sup",
    "preserve",
    "closing-extensive",
    "opening-antiextensive",
    "eps-delta-eps",
    "delta-eps-delta",
    "idempotent",
]


def test_law_registry():
    assert set(LAWS) == set(GENERIC) | {"cover-antiextensive", "cover-extensive", "boolean-duality", "classical-duality"}
    with pytest.raises(UnknownName):
        check_law(fix_set()[1], "distributive")


def test_adjunction_exhaustive_fix_set():
    r = check_law(fix_set()[1], "adjunction", Exhaustive())
    assert r.holds and r.samples == 32 * 32 and r.witness is None


@pytest.mark.parametrize("name", list(all_fixtures()))
def test_generic_laws_sampled(name):
    _, b = all_fixtures()[name]
    for law in GENERIC:
        r = check_law(b, law, Sampled(200, seed=3))
        assert r.holds is True, (law, r.witness)


@pytest.mark.parametrize("name", ["set", "p4-vertex", "triangle"])
def test_all_laws_exhaustive(name):
    _, b = all_fixtures()[name]
    for r in check_all(b, Exhaustive(max_family=2)):
        assert r.holds is not False, (r.law, r.witness)


def test_cover_laws_gated():
    E, b = fix_p4("edge")
    r = check_law(b, "cover-extensive")
    assert r.holds is None and r.status == "precondition-unmet" and "cover" in r.note
    V, bv = fix_p4()
    assert check_law(bv, "cover-extensive").holds is True
    assert check_law(bv, "boolean-duality").holds is None
    assert check_law(bv, "classical-duality").holds is None


def test_boolean_duality_counterexample():
    S = make_lattice(GroundSet([0, 1]))
    b = relation_se(S, [(0, 0), (0, 1), (1, 1)])
    r = check_law(b, "boolean-duality", Exhaustive())
    assert r.holds is False
    assert r.witness["d"] == {"elements": ["0"]}
    assert erode(b, S.make(elements=[1])).elements == {"1"}
    assert S.complement(dilate(b, S.make(elements=[0]))) == S.bottom


def test_boolean_duality_symmetric():
    S, b = fix_set()
    assert check_law(b, "boolean-duality", Exhaustive()).holds is True


def test_classical_duality_random_relations():
    S = make_lattice(GroundSet(range(5)))
    rng = random.Random(7)
    for _ in range(200):
        pairs = [(x, y) for x in range(5) for y in range(5) if x == y or rng.random() < 0.3]
        b = relation_se(S, pairs)
        a = random_subobject(S, rng)
        assert erode(b, S.complement(a)) == S.complement(dilate(se_transpose(b), a))
    assert check_law(b, "classical-duality", Exhaustive()).holds is True


def test_seeded_reports_reproduce():
    _, b = fix_p4()
    one = [r.to_json() for r in check_all(b, Sampled(50, seed=9))]
    two = [r.to_json() for r in check_all(b, Sampled(50, seed=9))]
    assert json.dumps(one) == json.dumps(two)
    assert all(r["seed"] == 9 for r in one)


def test_random_subobject_is_valid():
    rng = random.Random(0)
    for lat, _ in all_fixtures().values():
        for _ in range(100):
            d = random_subobject(lat, rng)
            assert lat.ground.layout.interior(d.mask) == d.mask


def test_sampler_covers_empty_family():
    _, b = fix_set()
    r = check_law(b, "commute-inf", Exhaustive(max_family=0))
    assert r.holds and r.samples == 1


def test_witness_present_only_on_failure():
    for _, b in all_fixtures().values():
        for r in check_all(b, Sampled(20, seed=1)):
            assert (r.witness is not None) == (r.holds is False)

import pytest

from morphocat.errors import UnknownName, UnknownSchema
from morphocat.fixtures import KRIPKE_RELATION, KRIPKE_WORLDS, all_fixtures, fix_p4
from morphocat.logic import Model, kripke_to_model, parse_formula, satisfies
from morphocat.logic.axioms import (
    INTUITIONISTIC,
    MODAL,
    PROFILES,
    REGISTRY,
    get_schema,
    instantiate,
    match_axiom,
    matching_schemas,
    validate_axiom_suite,
)
from morphocat.logic.formula import Prop
from morphocat.structuring import is_covered


def test_registry_shape():
    assert len(INTUITIONISTIC) == 13 and len(MODAL) == 8
    assert set(PROFILES) == {"intuitionistic-base", "boolean-classical", "S4", "B", "S5"}
    for ids in PROFILES.values():
        assert all(i in REGISTRY for i in ids)
    with pytest.raises(UnknownSchema):
        get_schema("k")


def test_match_examples():
    sub = match_axiom("box-and", parse_formula("[](p & q) -> []p & []q"))
    assert sub == {"A": Prop("p"), "B": Prop("q")}
    assert match_axiom("box-t", parse_formula("[]p -> q")) is None
    # the adjunction property is a derived rule, not an axiom
    assert matching_schemas(parse_formula("(p -> []q) -> <>p -> q")) == []


def test_iff_schemas_match_each_direction():
    fwd = parse_formula("<>(p | q) -> <>p | <>q")
    back = parse_formula("<>p | <>q -> <>(p | q)")
    both = parse_formula("(<>(p | q) -> <>p | <>q) & (<>p | <>q -> <>(p | q))")
    for f in (fwd, back, both):
        assert match_axiom("dia-or", f) is not None
    assert match_axiom("dia-or", parse_formula("<>(p | q) -> <>q | <>p")) is None


def test_match_is_most_general():
    sub = match_axiom("imp-k", parse_formula("[]x -> (y & z) -> []x"))
    assert sub == {"A": parse_formula("[]x"), "B": parse_formula("y & z")}
    assert match_axiom("imp-k", parse_formula("p -> q -> r")) is None


def test_instantiate():
    s = get_schema("s4")
    assert instantiate(s, {"A": parse_formula("p & q")}) == parse_formula("[](p & q) -> [][](p & q)")


def test_base_profile_on_kripke_fixture():
    m = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {})
    reports = validate_axiom_suite(m)
    assert all(r.holds is True for r in reports)
    assert reports[0].samples == 16 * 4  # 4^2 valuations x 2^2 metavariable maps


@pytest.mark.parametrize("name", [n for n, (_, b) in all_fixtures().items() if is_covered(b)])
def test_base_profile_on_covered_fixtures(name):
    lat, b = all_fixtures()[name]
    reports = validate_axiom_suite(Model(lat, b))
    bad = [(r.law, r.witness) for r in reports if r.holds is not True]
    assert bad == []


def test_boolean_profile_gated_on_graph():
    lat, b = fix_p4()
    reports = {r.law: r for r in validate_axiom_suite(Model(lat, b), "boolean-classical")}
    assert reports["duality"].holds is None and reports["duality"].status == "precondition-unmet"
    assert reports["excluded-middle"].holds is None


def test_boolean_profile_on_asymmetric_kripke():
    m = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {})
    reports = {r.law: r for r in validate_axiom_suite(m, "boolean-classical")}
    assert reports["excluded-middle"].holds is True
    # same-b duality needs a symmetric relation
    assert reports["duality"].holds is False


def _holds(model, profile):
    return all(r.holds for r in validate_axiom_suite(model, profile))


def test_extension_profiles():
    # the fixture relation is transitive, which is all s4 and s5 need here
    m = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {})
    assert (_holds(m, "S4"), _holds(m, "B"), _holds(m, "S5")) == (True, True, True)
    chain = kripke_to_model("abc", [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")], {})
    assert (_holds(chain, "S4"), _holds(chain, "B"), _holds(chain, "S5")) == (False, True, False)
    s4 = {r.law: r for r in validate_axiom_suite(chain, "S4")}["s4"]
    assert s4.holds is False
    atom = s4.witness["substitution"]["A"]
    val = {k: v["elements"] for k, v in s4.witness["valuation"].items()}
    m = kripke_to_model("abc", [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")], val)
    assert not satisfies(m, parse_formula(f"[]{atom} -> [][]{atom}"))


def test_table_evaluation_matches_model_evaluation():
    chain = kripke_to_model("abc", [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")], {})
    lat, b = fix_p4()
    for model in (chain, Model(lat, b)):
        for profile in PROFILES:
            fast = validate_axiom_suite(model, profile)
            slow = validate_axiom_suite(model, profile, limit=1, samples=400, seed=1)
            assert "sampled" in slow[0].note
            for f, s in zip(fast, slow):
                # sampling can only miss failures
                assert f.holds is not True or s.holds is not False


def test_uncovered_model_skips_t_axioms():
    lat, b = fix_p4("edge")
    reports = {r.law: r for r in validate_axiom_suite(Model(lat, b, unchecked=True))}
    assert reports["box-t"].holds is None and reports["dia-t"].holds is None
    assert reports["box-and"].holds is True


def test_sampling_fallback():
    lat, b = all_fixtures()["p6-vertex"]
    reports = validate_axiom_suite(Model(lat, b), limit=1000, samples=50, seed=3)
    assert all(r.holds for r in reports)
    assert "sampled 50" in reports[0].note


def test_unknown_profile():
    with pytest.raises(UnknownName):
        validate_axiom_suite(kripke_to_model("a", [("a", "a")], {}), "K45")

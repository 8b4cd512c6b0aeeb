import random

import pytest

from morphocat.errors import NotCovered, UnknownProposition, UnknownWorld
from morphocat.fixtures import KRIPKE_RELATION, KRIPKE_WORLDS, all_fixtures, fix_p4
from morphocat.laws import random_subobject
from morphocat.logic import Model, entails_on_models, evaluate, kripke_to_model, parse_formula, satisfies
from morphocat.structuring import is_covered

from oracles import kripke_eval, random_formula


def kripke(p=("q1",), q=()):
    return kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {"p": p, "q": q})


def test_kripke_model_shape():
    m = kripke()
    assert m.covered and m.lattice.is_boolean()
    with pytest.raises(NotCovered):
        kripke_to_model(KRIPKE_WORLDS, [("q0", "q0"), ("q0", "q1")], {})
    m2 = kripke_to_model(KRIPKE_WORLDS, [("q0", "q0"), ("q0", "q1")], {}, unchecked=True)
    assert not m2.covered
    with pytest.raises(UnknownWorld):
        kripke_to_model(KRIPKE_WORLDS, [("q0", "q9")], {})
    with pytest.raises(UnknownWorld):
        kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {"p": ["q7"]})


def test_eval_examples():
    m = kripke()
    assert evaluate(m, parse_formula("[]p")).elements == {"q1"}
    # dilation collects the successors of p-worlds: b(q1) = {q1}
    assert evaluate(m, parse_formula("<>p")).elements == {"q1"}
    assert evaluate(m, parse_formula("T")) == m.lattice.top
    empty = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {})
    assert evaluate(empty, parse_formula("T")).elements == {"q0", "q1"}
    with pytest.raises(UnknownProposition):
        evaluate(empty, parse_formula("p"))


def test_satisfies_examples():
    m = kripke()
    assert satisfies(m, parse_formula("[]p -> p"))
    assert not satisfies(m, parse_formula("p"))
    assert satisfies(kripke(p=("q0", "q1")), parse_formula("p"))
    # with p true only at q0 the world q0 sees a non-p world
    m0 = kripke(p=("q0",))
    assert not satisfies(m0, parse_formula("p -> []p"))
    assert evaluate(m0, parse_formula("p -> []p")).elements == {"q1"}
    # with p = {q1} the formula happens to hold
    assert satisfies(m, parse_formula("p -> []p"))


def test_entailment_examples():
    models = [kripke(p=v) for v in [(), ("q0",), ("q1",), ("q0", "q1")]]
    assert entails_on_models(models, [parse_formula("p")], parse_formula("<>p"))
    assert entails_on_models(models, [], parse_formula("T"))
    assert entails_on_models(models, [parse_formula("[]p")], parse_formula("p"))
    assert not entails_on_models(models, [], parse_formula("p -> []p"))


def random_reflexive(rng, n, symmetric=False):
    worlds = [f"w{i}" for i in range(n)]
    rel = {(w, w) for w in worlds}
    for u in worlds:
        for v in worlds:
            if rng.random() < 0.3:
                rel.add((u, v))
                if symmetric:
                    rel.add((v, u))
    return worlds, sorted(rel)


def random_kripke(rng, symmetric=False, atoms=("p", "q", "r")):
    worlds, rel = random_reflexive(rng, rng.randint(1, 5), symmetric)
    val = {a: [w for w in worlds if rng.random() < 0.5] for a in atoms}
    return worlds, rel, val


def test_box_and_converse_diamond_match_textbook():
    rng = random.Random(9)
    for _ in range(100):
        worlds, rel, val = random_kripke(rng)
        m = kripke_to_model(worlds, rel, val)
        for _ in range(10):
            f = random_formula(rng, 5)
            got = evaluate(m, f).elements
            assert got == kripke_eval(worlds, rel, val, f, diamond="converse")


def test_symmetric_relations_match_forward_diamond():
    rng = random.Random(10)
    for _ in range(100):
        worlds, rel, val = random_kripke(rng, symmetric=True)
        m = kripke_to_model(worlds, rel, val)
        for _ in range(10):
            f = random_formula(rng, 5)
            assert evaluate(m, f).elements == kripke_eval(worlds, rel, val, f)


def test_forward_diamond_differs_on_asymmetric_relation():
    m = kripke()
    f = parse_formula("<>p")
    textbook = kripke_eval(KRIPKE_WORLDS, KRIPKE_RELATION, {"p": ["q1"], "q": []}, f)
    assert textbook == {"q0", "q1"}
    assert evaluate(m, f).elements == {"q1"}


def _models():
    out = []
    for name, (lat, b) in all_fixtures().items():
        if is_covered(b):
            out.append(Model(lat, b))
    out.append(kripke())
    return out


def test_implication_lemma():
    rng = random.Random(500)
    models = _models()
    for _ in range(500):
        base = rng.choice(models)
        lat = base.lattice
        m = base.with_valuation({a: random_subobject(lat, rng) for a in "pqr"})
        f, g = random_formula(rng, 4), random_formula(rng, 4)
        imp = parse_formula(f"({f}) -> ({g})")
        assert satisfies(m, imp) == lat.leq(evaluate(m, f), evaluate(m, g))


def test_uncovered_model_rejected():
    lat, b = fix_p4("edge")
    with pytest.raises(NotCovered):
        Model(lat, b)
    m = Model(lat, b, unchecked=True)
    assert not m.covered


def test_negation_is_pseudo_complement():
    lat, b = fix_p4()
    d = lat.make(vertices="b")
    m = Model(lat, b, {"p": d})
    assert evaluate(m, parse_formula("!p")) == lat.complement(d)
    assert not satisfies(m, parse_formula("p | !p"))

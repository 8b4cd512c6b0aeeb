import random

import pytest

from morphocat.errors import ParseError
from morphocat.logic.formula import (
    And,
    Bot,
    Box,
    Diamond,
    Implies,
    Not,
    Or,
    Prop,
    Top,
    depth,
    parse_formula,
    print_formula,
    props,
    substitute,
)

from oracles import random_formula

p, q, r = Prop("p"), Prop("q"), Prop("r")


@pytest.mark.parametrize(
    "text, tree",
    [
        ("[]p -> p", Implies(Box(p), p)),
        ("!<>(p & q)", Not(Diamond(And(p, q)))),
        ("p -> q -> r", Implies(p, Implies(q, r))),
        ("(p -> q) -> r", Implies(Implies(p, q), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q | r", Or(Or(p, q), r)),
        ("T & F", And(Top(), Bot())),
        ("[]<>!p", Box(Diamond(Not(p)))),
        ("□(p ⇒ q) → ◇⊤", Implies(Box(Implies(p, q)), Diamond(Top()))),
        ("¬p ∧ q ∨ r", Or(And(Not(p), q), r)),
        ("  p_1'  ", Prop("p_1'")),
    ],
)
def test_parse(text, tree):
    assert parse_formula(text) == tree


@pytest.mark.parametrize(
    "tree, text",
    [
        (Implies(Box(p), p), "[]p -> p"),
        (Implies(Implies(p, q), r), "(p -> q) -> r"),
        (Implies(p, Implies(q, r)), "p -> q -> r"),
        (Or(p, Or(q, r)), "p | (q | r)"),
        (And(Or(p, q), r), "(p | q) & r"),
        (Not(And(p, q)), "!(p & q)"),
        (Box(Not(Diamond(p))), "[]!<>p"),
    ],
)
def test_print(tree, text):
    assert print_formula(tree) == text
    assert str(tree) == text


@pytest.mark.parametrize(
    "text, pos",
    [("p ->", 4), ("(p & q", 6), ("p q", 2), ("p # q", 2), ("", 0), ("-> p", 0), ("p & )", 4)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.position == pos


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(1000):
        f = random_formula(rng, 6)
        assert depth(f) <= 7
        text = print_formula(f)
        assert parse_formula(text) == f
        assert print_formula(parse_formula(text)) == text


def test_helpers():
    f = parse_formula("[](p -> q) & r")
    assert props(f) == {"p", "q", "r"}
    assert substitute(f, {"p": Box(q)}) == parse_formula("[]([]q -> q) & r")
    assert depth(Top()) == 0 and depth(f) == 3

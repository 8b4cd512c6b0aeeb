"""Modal logic read off a structuring element.

Box is erosion and diamond is dilation. Implication is the Heyting
exponential of the lattice, so the logic is intuitionistic unless the lattice
is boolean.
"""

from morphocat.fixtures import KRIPKE_RELATION, KRIPKE_WORLDS, fix_p4
from morphocat.logic import Model, evaluate, kripke_to_model, parse_formula, satisfies
from morphocat.logic.axioms import validate_axiom_suite
from morphocat.logic.proofs import BUNDLED, check_derivation

m = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {"p": ["q0"]})
for text in ["[]p -> p", "<>p", "p -> []p", "!!p -> p"]:
    f = parse_formula(text)
    print(f"{text:12s} {sorted(evaluate(m, f).elements)}  valid={satisfies(m, f)}")

# A graph lattice is not boolean: excluded middle is not valid there, and the
# classical schemas are reported as having an unmet precondition.
lat, b = fix_p4("vertex")
g = Model(lat, b).with_valuation({"p": lat.make(vertices="ab", edges=[("a", "b")])})
print("p | !p on P4:", evaluate(g, parse_formula("p | !p")))
for r in validate_axiom_suite(g, "boolean-classical"):
    if r.holds is not True:
        print(r.law, r.status, r.witness)

for name, build in BUNDLED.items():
    res = check_derivation(build())
    print(name, "ok" if res.ok else res.error, res.proved if res.ok else "")

# (p -> []q) -> <>p -> q is not valid; here is the countermodel.
cm = kripke_to_model(KRIPKE_WORLDS, KRIPKE_RELATION, {"p": ["q0"], "q": []})
print(sorted(evaluate(cm, parse_formula("(p -> []q) -> <>p -> q")).elements))

"""Hilbert-style derivations and their checker.

A derivation is a list of lines, each a formula with a justification:

``axiom [schema]``
    an instance of a schema of the active profile (the schema id may be
    omitted, in which case any schema of the profile will do);
``premise [k]``
    the k-th premise (1-based);
``mp [i, j]``
    line i is ``X -> Y``, line j is ``X``, this line is ``Y``;
``nec [i]``
    this line is ``[]`` of line i;
``mono [i]``
    line i is ``X -> Y`` and this line is ``[]X -> []Y`` or ``<>X -> <>Y``.

Line numbers are 1-based.  With ``consequence="local"`` the rules ``nec`` and
``mono`` only apply to lines that use no premise, so a checked derivation of
``phi`` from premises ``G`` yields a premise-free proof of ``/\\G -> phi``.
With ``"global"`` they apply everywhere, which certifies only that every model
satisfying all premises satisfies ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import InvalidStep, UnknownSchema
from .axioms import PROFILES, get_schema, match_axiom
from .formula import And, Box, Diamond, Formula, Implies, parse_formula, print_formula

RULES = ("axiom", "premise", "mp", "nec", "mono")


@dataclass(frozen=True)
class Line:
    formula: Formula
    rule: str
    args: tuple = ()

    def to_json(self) -> dict:
        return {"formula": print_formula(self.formula), "rule": self.rule, "args": list(self.args)}


@dataclass(frozen=True)
class Derivation:
    lines: tuple[Line, ...]
    premises: tuple[Formula, ...] = ()
    conclusion: Formula | None = None
    consequence: str = "local"
    profile: str = "intuitionistic-base"

    def to_json(self) -> dict:
        out = {
            "premises": [print_formula(p) for p in self.premises],
            "consequence": self.consequence,
            "profile": self.profile,
            "lines": [ln.to_json() for ln in self.lines],
        }
        if self.conclusion is not None:
            out["conclusion"] = print_formula(self.conclusion)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Derivation":
        lines = tuple(
            Line(parse_formula(ln["formula"]), ln["rule"], tuple(ln.get("args", ()))) for ln in data["lines"]
        )
        concl = data.get("conclusion")
        return cls(
            lines,
            tuple(parse_formula(p) for p in data.get("premises", ())),
            parse_formula(concl) if concl is not None else None,
            data.get("consequence", "local"),
            data.get("profile", "intuitionistic-base"),
        )


@dataclass
class ProofCheck:
    ok: bool
    error: InvalidStep | None = None
    proved: Formula | None = None
    premises_used: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "line": self.error.line if self.error else None,
            "reason": self.error.reason if self.error else None,
            "proved": print_formula(self.proved) if self.proved is not None else None,
            "premises_used": self.premises_used,
        }


def _ref(args: Sequence, k: int, current: int) -> int:
    try:
        i = args[k]
    except IndexError:
        raise InvalidStep(current, "missing line reference") from None
    if not isinstance(i, int) or isinstance(i, bool):
        raise InvalidStep(current, f"line reference {i!r} is not an integer")
    if not 1 <= i < current:
        raise InvalidStep(current, f"line {i} is not an earlier line")
    return i


def _check_line(d: Derivation, n: int, line: Line, done: list[Formula], deps: list[frozenset]) -> frozenset:
    f, rule, args = line.formula, line.rule, line.args
    if rule == "axiom":
        if len(args) > 1:
            raise InvalidStep(n, "axiom takes at most one argument")
        allowed = PROFILES[d.profile]
        ids = [args[0]] if args else allowed
        for sid in ids:
            if not isinstance(sid, str):
                raise InvalidStep(n, f"schema id {sid!r} is not a string")
            if sid not in allowed:
                try:
                    get_schema(sid)
                except UnknownSchema:
                    raise InvalidStep(n, f"unknown schema {sid!r}") from None
                raise InvalidStep(n, f"schema {sid!r} is not in profile {d.profile!r}")
            if match_axiom(sid, f) is not None:
                return frozenset()
        raise InvalidStep(n, f"not an instance of {args[0] if args else 'any axiom schema'}")
    if rule == "premise":
        if len(args) != 1:
            raise InvalidStep(n, "premise takes exactly one argument")
        k = args[0]
        if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= len(d.premises):
            raise InvalidStep(n, f"no premise {k!r}")
        if d.premises[k - 1] != f:
            raise InvalidStep(n, f"formula differs from premise {k}")
        return frozenset([k])
    if rule == "mp":
        if len(args) != 2:
            raise InvalidStep(n, "mp takes exactly two arguments")
        i, j = _ref(args, 0, n), _ref(args, 1, n)
        imp = done[i - 1]
        if not isinstance(imp, Implies):
            raise InvalidStep(n, f"line {i} is not an implication")
        if imp.left != done[j - 1]:
            raise InvalidStep(n, f"line {j} is not the antecedent of line {i}")
        if imp.right != f:
            raise InvalidStep(n, f"formula is not the consequent of line {i}")
        return deps[i - 1] | deps[j - 1]
    if rule in ("nec", "mono"):
        if len(args) != 1:
            raise InvalidStep(n, f"{rule} takes exactly one argument")
        i = _ref(args, 0, n)
        if d.consequence == "local" and deps[i - 1]:
            raise InvalidStep(n, f"{rule} applied to line {i}, which depends on premises (local consequence)")
        src = done[i - 1]
        if rule == "nec":
            if f != Box(src):
                raise InvalidStep(n, f"formula is not [] of line {i}")
        else:
            if not isinstance(src, Implies):
                raise InvalidStep(n, f"line {i} is not an implication")
            if f not in (Implies(Box(src.left), Box(src.right)), Implies(Diamond(src.left), Diamond(src.right))):
                raise InvalidStep(n, f"formula is not a monotone image of line {i}")
        return deps[i - 1]
    raise InvalidStep(n, f"unknown rule {rule!r}")


def check_derivation(d: Derivation) -> ProofCheck:
    """Check every line; report the first failure."""
    try:
        if d.consequence not in ("local", "global"):
            raise InvalidStep(0, f"unknown consequence {d.consequence!r}")
        if d.profile not in PROFILES:
            raise InvalidStep(0, f"unknown profile {d.profile!r}")
        if not d.lines:
            raise InvalidStep(0, "empty derivation")
        done: list[Formula] = []
        deps: list[frozenset] = []
        for n, line in enumerate(d.lines, start=1):
            deps.append(_check_line(d, n, line, done, deps))
            done.append(line.formula)
        if d.conclusion is not None and d.conclusion != done[-1]:
            raise InvalidStep(len(done), "last line differs from the claimed conclusion")
    except InvalidStep as exc:
        return ProofCheck(False, exc)
    return ProofCheck(True, None, done[-1], sorted(deps[-1]))


def assert_derivation(d: Derivation) -> Formula:
    res = check_derivation(d)
    if not res.ok:
        raise res.error
    return res.proved


# ---------------------------------------------------------------- building proofs


class ProofBuilder:
    """Append lines and get back their numbers; a few derived steps are built in."""

    def __init__(self, premises: Sequence[Formula | str] = (), consequence="local", profile="intuitionistic-base"):
        self.premises = tuple(parse_formula(p) if isinstance(p, str) else p for p in premises)
        self.consequence = consequence
        self.profile = profile
        self.lines: list[Line] = []

    def _add(self, f: Formula, rule: str, *args) -> int:
        self.lines.append(Line(f, rule, tuple(args)))
        return len(self.lines)

    def formula(self, n: int) -> Formula:
        return self.lines[n - 1].formula

    def axiom(self, f: Formula | str, schema: str) -> int:
        return self._add(parse_formula(f) if isinstance(f, str) else f, "axiom", schema)

    def premise(self, k: int) -> int:
        return self._add(self.premises[k - 1], "premise", k)

    def mp(self, i: int, j: int) -> int:
        return self._add(self.formula(i).right, "mp", i, j)

    def nec(self, i: int) -> int:
        return self._add(Box(self.formula(i)), "nec", i)

    def mono(self, i: int, modality: str = "box") -> int:
        src = self.formula(i)
        op = Box if modality == "box" else Diamond
        return self._add(Implies(op(src.left), op(src.right)), "mono", i)

    def compose(self, i: int, j: int) -> int:
        """From ``X -> Y`` (line i) and ``Y -> Z`` (line j) derive ``X -> Z``."""
        a, b = self.formula(i), self.formula(j)
        k = self.axiom(Implies(a, Implies(b, Implies(a.left, b.right))), "imp-compose")
        return self.mp(self.mp(k, i), j)

    def build(self, conclusion: Formula | None = None) -> Derivation:
        return Derivation(tuple(self.lines), self.premises, conclusion, self.consequence, self.profile)


def adjunction_proof() -> Derivation:
    """From ``p -> []q`` derive ``<>p -> q`` (global consequence)."""
    pb = ProofBuilder(["p -> []q"], consequence="global")
    h = pb.premise(1)
    m = pb.mono(h, "diamond")
    ax = pb.axiom("<>[]q -> q", "dia-box")
    pb.compose(m, ax)
    return pb.build(parse_formula("<>p -> q"))


def adjunction_converse_proof() -> Derivation:
    """From ``<>p -> q`` derive ``p -> []q`` (global consequence)."""
    pb = ProofBuilder(["<>p -> q"], consequence="global")
    h = pb.premise(1)
    m = pb.mono(h, "box")
    ax = pb.axiom("p -> []<>p", "box-dia")
    pb.compose(ax, m)
    return pb.build(parse_formula("p -> []q"))


def kripke_schema_proof() -> Derivation:
    """Premise-free proof of ``[](p -> q) -> []p -> []q``."""
    x, p, q = parse_formula("p -> q"), parse_formula("p"), parse_formula("q")
    z = And(x, p)
    pb = ProofBuilder()
    zx = pb.axiom(Implies(z, x), "and-elim-l")
    zp = pb.axiom(Implies(z, p), "and-elim-r")
    s = pb.axiom(Implies(Implies(z, x), Implies(Implies(z, p), Implies(z, q))), "imp-s")
    zq = pb.mp(pb.mp(s, zx), zp)
    box_zq = pb.mono(zq, "box")
    u, v, w = Box(x), Box(p), Box(q)
    uv = And(u, v)
    dist = pb.axiom(Implies(uv, Box(z)), "box-and")
    uv_w = pb.compose(dist, box_zq)
    # curry  u & v -> w  into  u -> v -> w
    pair = pb.axiom(Implies(u, Implies(v, uv)), "and-intro")
    k1 = pb.axiom(Implies(Implies(uv, w), Implies(u, Implies(uv, w))), "imp-k")
    u_uvw = pb.mp(k1, uv_w)
    c0 = Implies(Implies(v, uv), Implies(Implies(uv, w), Implies(v, w)))
    comp = pb.axiom(c0, "imp-compose")
    k2 = pb.axiom(Implies(c0, Implies(u, c0)), "imp-k")
    u_c0 = pb.mp(k2, comp)
    r = c0.right
    s1 = pb.axiom(Implies(Implies(u, c0), Implies(Implies(u, Implies(v, uv)), Implies(u, r))), "imp-s")
    u_r = pb.mp(pb.mp(s1, u_c0), pair)
    s2 = pb.axiom(
        Implies(Implies(u, r), Implies(Implies(u, Implies(uv, w)), Implies(u, Implies(v, w)))), "imp-s"
    )
    pb.mp(pb.mp(s2, u_r), u_uvw)
    return pb.build(Implies(u, Implies(v, w)))


BUNDLED = {
    "adjunction": adjunction_proof,
    "adjunction-converse": adjunction_converse_proof,
    "kripke-schema": kripke_schema_proof,
}

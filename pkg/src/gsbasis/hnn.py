"""HNN extensions of finite groups as rewriting systems.

The alphabet is one letter per non-identity element of G (in element order)
followed by ``t`` and ``t-``.  The relations are

* ``g g' -> [g g']`` for all non-identity g, g',
* ``g t -> g_A t phi(a_g)`` for g not an A-coset representative,
* ``g t- -> g_B t- phi^-1(b_g)`` for g not a B-coset representative,
* ``t t- -> 1`` and ``t- t -> 1``,

oriented by :class:`~gsbasis.orders.HnnOrder`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .freealg import Alphabet, Poly, Word
from .groups import CosetData, FiniteGroup, Isomorphism, Subgroup, left_cosets, verify_isomorphism
from .orders import T_NEG, T_POS, HnnOrder
from .rewrite import (
    DEFAULT_STEPS,
    ConditionAReport,
    GSReport,
    Presentation,
    check_condition_A,
    is_gs_basis,
    reduce_word,
)

T_NAME, TINV_NAME = "t", "t-"


@dataclass(frozen=True)
class HnnInstance:
    group: FiniteGroup
    A: Subgroup
    B: Subgroup
    phi: Isomorphism
    cos_a: CosetData
    cos_b: CosetData
    alphabet: Alphabet
    order: HnnOrder
    presentation: Presentation = field(repr=False)

    @property
    def t(self) -> int:
        return self.order.t_letter

    @property
    def tinv(self) -> int:
        return self.order.tinv_letter

    def letter_of(self, g: int) -> Word:
        """Word of a group element: the empty word for the identity."""
        return () if g == 0 else (g - 1,)

    def elem_of(self, x: int) -> int:
        return self.order.letter_elem[x]

    def parse(self, text: str) -> Word:
        return self.alphabet.parse_word(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format_word(w)


def build_hnn(G: FiniteGroup, A: Subgroup, B: Subgroup, phi: Mapping[int, int] | Isomorphism) -> HnnInstance:
    if not isinstance(phi, Isomorphism):
        phi = Isomorphism(A, B, dict(phi))
    if phi.domain != A or phi.codomain != B:
        raise ValueError("isomorphism does not map A onto B")
    if A.parent is not G or B.parent is not G:
        raise ValueError("subgroups belong to a different group")
    rep = verify_isomorphism(phi)
    if not rep.passed:
        raise ValueError(f"phi is not an isomorphism A -> B ({rep.failure} at {rep.witness})")
    phi_inv = phi.inverse()
    cos_a = left_cosets(G, A)
    cos_b = left_cosets(G, B)
    m = G.order
    names = list(G.names[1:]) + [T_NAME, TINV_NAME]
    alphabet = Alphabet(names, [(T_NAME, TINV_NAME)])
    letter_elem = list(range(1, m)) + [T_POS, T_NEG]
    order = HnnOrder(G, cos_a, cos_b, letter_elem)
    t, ti = m - 1, m

    def word(g):
        return () if g == 0 else (g - 1,)

    rels = []
    for g in range(1, m):
        for h in range(1, m):
            rels.append(Poly.binomial(alphabet, (g - 1, h - 1), word(G.mul(g, h))))
    for g in range(1, m):
        r, a = cos_a.decompose[g]
        if r != g:
            rels.append(Poly.binomial(alphabet, (g - 1, t), word(r) + (t,) + word(phi(a))))
    for g in range(1, m):
        r, b = cos_b.decompose[g]
        if r != g:
            rels.append(Poly.binomial(alphabet, (g - 1, ti), word(r) + (ti,) + word(phi_inv(b))))
    rels.append(Poly.binomial(alphabet, (t, ti), ()))
    rels.append(Poly.binomial(alphabet, (ti, t), ()))
    pres = Presentation(alphabet, rels, order)
    for r, f in zip(pres.rules, rels):
        # each relation must be oriented with the left side leading
        assert r.lead == max(f, key=order.key)
    return HnnInstance(G, A, B, phi, cos_a, cos_b, alphabet, order, pres)


@dataclass
class HnnReport:
    passed: bool
    condition_a: ConditionAReport
    gs: GSReport
    ab_bound: int
    cd_bound: int


def verify_hnn_instance(inst: HnnInstance, ab_bound: int = 3, cd_bound: int = 2) -> HnnReport:
    """Condition (A) up to context length ``ab_bound``; compositions with contexts up to ``cd_bound``."""
    ca = check_condition_A(inst.presentation, ab_bound)
    gs = is_gs_basis(inst.presentation, cd_bound=cd_bound)
    return HnnReport(ca.passed and gs.passed, ca, gs, ab_bound, cd_bound)


def hnn_normal_form(inst: HnnInstance, u: Word, budget: int = DEFAULT_STEPS) -> Word:
    return reduce_word(inst.presentation, tuple(u), budget=budget)


@dataclass
class BrittonShape:
    in_shape: bool  # every segment between stable letters is at most one letter
    a_reps: bool  # element before each t is an A-coset representative
    b_reps: bool  # element before each t- is a B-coset representative
    no_pinch: bool  # no t t- or t- t factor
    tail_free: bool = True  # final element unconstrained
    elements: tuple = ()  # g_1 .. g_{n+1} as element indices (0 for absent)
    exponents: tuple = ()
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.in_shape and self.a_reps and self.b_reps and self.no_pinch and self.tail_free


def check_britton_shape(inst: HnnInstance, u: Word) -> BrittonShape:
    w = inst.order.weight(tuple(u))
    segs = list(w.segments) + [w.tail]
    in_shape = all(len(s) <= 1 for s in segs)
    elems = tuple(inst.elem_of(s[0]) if len(s) == 1 else 0 for s in segs)
    violations = []
    if not in_shape:
        violations.append(("shape", [i for i, s in enumerate(segs) if len(s) > 1]))
    c1 = c2 = True
    for i, (s, e) in enumerate(zip(w.segments, w.exponents)):
        g = inst.elem_of(s[-1]) if s else 0
        if len(s) > 1:
            continue
        if e == 1 and not inst.cos_a.is_rep(g):
            c1 = False
            violations.append(("a_rep", i))
        if e == -1 and not inst.cos_b.is_rep(g):
            c2 = False
            violations.append(("b_rep", i))
    c3 = True
    for i in range(len(u) - 1):
        x, y = u[i], u[i + 1]
        if {x, y} == {inst.t, inst.tinv}:
            c3 = False
            violations.append(("pinch", i))
    return BrittonShape(in_shape, c1, c2, c3, True, elems, w.exponents, violations)

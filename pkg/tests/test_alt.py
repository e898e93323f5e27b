import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsbasis.alt import (
    alt_bijection_check,
    build_alt,
    check_defining_relations,
    enumerate_alt_normal_forms,
    eval_word,
    verify_alt_gsb,
)
from gsbasis.freealg import all_words
from gsbasis.groups import compose, format_cycles, perm_inverse
from gsbasis.rewrite import reduce_word


def rules_of(inst):
    return {inst.gsbasis.format_rule(r) for r in inst.gsbasis.rules}


def test_n3_rules():
    assert rules_of(build_alt(3)) == {"x1 x1 = x1-", "x1- x1- = x1", "x1 x1- = 1", "x1- x1 = 1"}


def test_n4_rule_count():
    inst = build_alt(4)
    assert len(inst.gsbasis.rules) == 7
    assert {"x2 x2 = 1", "x2 x1 x2 = x1- x2 x1-", "x2 x1- x2 = x1 x2 x1"} <= rules_of(inst)


def test_n5_families():
    r = rules_of(build_alt(5))
    assert {"x3 x1 = x1- x3", "x3 x1- = x1 x3", "x3 x2 x3 = x2 x3 x2"} <= r


def test_n_too_small():
    with pytest.raises(ValueError):
        build_alt(2)


@pytest.mark.parametrize("n", [4, 6])
def test_verify(n):
    assert verify_alt_gsb(build_alt(n)).passed


def test_drop_47_fails():
    rep = verify_alt_gsb(build_alt(4, drop=("x2-x1-braid",)))
    assert not rep.passed and rep.residues
    # the trimmed set is confluent, but (x1 x2)^3 = 1 no longer reduces
    assert rep.gs.passed
    assert [(lhs, rhs) for lhs, rhs, _ in rep.membership] == [((1, 2) * 3, ())]


def test_verify_reports_membership():
    rep = verify_alt_gsb(build_alt(5))
    assert rep.passed and rep.membership == []


@pytest.mark.parametrize("n,count", [(3, 3), (4, 12), (5, 60)])
def test_enumeration(n, count):
    e = enumerate_alt_normal_forms(build_alt(n))
    assert e.finite and e.count == count and not e.shape_mismatches


def test_n4_factor_combinations():
    e = enumerate_alt_normal_forms(build_alt(4))
    combos = {(s[0], s[1]) for s in e.shapes}
    assert len({c[0] for c in combos}) == 3 and len({c[1] for c in combos}) == 4


def test_eval_examples():
    inst = build_alt(4)
    x1 = eval_word(inst, (1,))
    assert format_cycles(x1) == "(1,3,2)"  # (1 2) then (2 3)
    assert eval_word(inst, ()) == (0, 1, 2, 3)
    assert eval_word(inst, (1, 0)) == (0, 1, 2, 3)


@pytest.mark.parametrize("n", [5, 8])
def test_relations(n):
    assert check_defining_relations(build_alt(n)).passed


def test_perturbed_generators_fail():
    inst = build_alt(5)
    gens = list(inst.generators)
    gens[2] = gens[3]
    rep = check_defining_relations(type(inst)(**{**inst.__dict__, "generators": tuple(gens)}))
    assert not rep.passed and rep.failures


@pytest.mark.parametrize("n,size", [(3, 3), (4, 12), (6, 360)])
def test_bijection(n, size):
    rep = alt_bijection_check(build_alt(n))
    assert rep.passed and rep.n_distinct == size == rep.group_order


def test_eval_preserved_by_reduction():
    inst = build_alt(5)
    for w in all_words(len(inst.alphabet), 4):
        assert eval_word(inst, reduce_word(inst.gsbasis, w)) == eval_word(inst, w)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 4), max_size=8), st.lists(st.integers(0, 4), max_size=8))
def test_eval_homomorphism(u, v):
    inst = build_alt(6)
    u, v = tuple(u), tuple(v)
    assert eval_word(inst, u + v) == compose(eval_word(inst, u), eval_word(inst, v))


def test_x1_inverse_letter():
    inst = build_alt(4)
    assert inst.generators[0] == perm_inverse(inst.generators[1])

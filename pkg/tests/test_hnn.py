import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsbasis.freealg import all_words
from gsbasis.groups import cyclic_group
from gsbasis.hnn import build_hnn, check_britton_shape, hnn_normal_form, verify_hnn_instance
from conftest import z4_group
from oracles import britton_reduce


def rule_strings(inst):
    return {inst.presentation.format_rule(r) for r in inst.presentation.rules}


def test_z4_rules(z4):
    rules = rule_strings(z4)
    for expected in ["a a3 = 1", "a2 t = t a2", "a3 t = a t a2", "a2 t- = t- a2", "a3 t- = a t- a2", "t t- = 1", "t- t = 1"]:
        assert expected in rules
    # a is its own representative: no rule rewrites a t
    assert not any(r.startswith("a t =") for r in rules)
    assert len(rules) == 9 + 2 + 2 + 2


def test_single_coset():
    G = z4_group()
    A = G.subgroup(range(4))
    inst = build_hnn(G, A, A, {g: g for g in range(4)})
    rules = rule_strings(inst)
    for g in ("a", "a2", "a3"):
        assert f"{g} t = t {g}" in rules and f"{g} t- = t- {g}" in rules


def test_phi_must_be_isomorphism():
    G = cyclic_group(6)
    A = G.subgroup([0, 2, 4])
    with pytest.raises(ValueError):
        build_hnn(G, A, A, {0: 0, 2: 2, 4: 2})


@pytest.mark.parametrize("word,nf", [("a3 t", "a t a2"), ("a2 t t- a", "a3"), ("t- a2 t", "a2")])
def test_normal_form_examples(z4, word, nf):
    assert z4.format(hnn_normal_form(z4, z4.parse(word))) == nf


def test_shape_examples(z4):
    assert check_britton_shape(z4, z4.parse("a t a2")).passed
    s = check_britton_shape(z4, z4.parse("a2 t"))
    assert not s.a_reps and s.in_shape
    s = check_britton_shape(z4, z4.parse("t t-"))
    assert not s.no_pinch
    s = check_britton_shape(z4, z4.parse("a a t"))
    assert not s.in_shape and not s.passed


def test_verify_z4(z4):
    rep = verify_hnn_instance(z4, ab_bound=2, cd_bound=2)
    assert rep.passed and rep.condition_a.passed and rep.gs.passed


@pytest.mark.parametrize("name", ["Z4", "S3", "Z6"])
def test_oracle_and_shape_up_to_4(hnn_fixtures, name):
    inst = hnn_fixtures[name]
    for u in all_words(len(inst.alphabet), 4):
        nf = hnn_normal_form(inst, u)
        assert nf == britton_reduce(inst, u), inst.format(u)
        assert check_britton_shape(inst, nf).passed


@pytest.mark.parametrize("name", ["Z4", "S3", "Z6"])
def test_shape_words_are_reduced(hnn_fixtures, name):
    inst = hnn_fixtures[name]
    p = inst.presentation
    for u in all_words(len(inst.alphabet), 4):
        if check_britton_shape(inst, u).passed:
            assert p.is_reduced(u)


@pytest.mark.parametrize("name", ["Z4", "S3", "Z6"])
def test_conjugation_law(hnn_fixtures, name):
    inst = hnn_fixtures[name]
    for a in inst.A.elements:
        w = (inst.tinv,) + inst.letter_of(a) + (inst.t,)
        assert hnn_normal_form(inst, w) == inst.letter_of(inst.phi(a))


def test_z6_phi_is_visible(z6):
    # t- c2 t = phi(c2) = c4
    assert z6.format(hnn_normal_form(z6, z6.parse("t- c2 t"))) == "c4"


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["Z4", "S3", "Z6"]), st.data())
def test_group_law(hnn_fixtures, name, data):
    inst = hnn_fixtures[name]
    n = len(inst.alphabet)
    u = tuple(data.draw(st.lists(st.integers(0, n - 1), max_size=6)))
    v = tuple(data.draw(st.lists(st.integers(0, n - 1), max_size=6)))
    nf = lambda w: hnn_normal_form(inst, w)
    assert nf(u + v) == nf(nf(u) + nf(v))

"""Acceptance criteria, one test per criterion; every check is exact."""

import random
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from gsbasis.alt import alt_bijection_check, build_alt, check_defining_relations, enumerate_alt_normal_forms, verify_alt_gsb
from gsbasis.cli import main
from gsbasis.freealg import Poly, all_words
from gsbasis.groups import GroupAxiomError, group_from_table
from gsbasis.hnn import check_britton_shape, hnn_normal_form, verify_hnn_instance
from gsbasis.io import load_presentation
from gsbasis.orders import order_diagnostics
from gsbasis.rewrite import is_gs_basis, normal_form, red_enumerate, reduce_word, shirshov_complete
from conftest import semigroup_presentation
from oracles import britton_reduce, evaluate

ALT_NS = (3, 4, 5, 6, 7)
HNN_NAMES = ("Z4", "S3", "Z6")


def test_alternating_counts(acceptance_report):
    acceptance_report.update(id=1, name="A_n rule sets verify and |Red(S)| = n!/2 for n = 3..7")
    counts = {}
    for n in ALT_NS:
        inst = build_alt(n)
        assert verify_alt_gsb(inst).passed, n
        en = enumerate_alt_normal_forms(inst)
        assert en.finite and not en.shape_mismatches
        counts[n] = en.count
    assert counts == {n: factorial(n) // 2 for n in ALT_NS}
    acceptance_report["detail"] = ", ".join(f"n={n}: {c}" for n, c in counts.items())


def test_alternating_bijection(acceptance_report):
    acceptance_report.update(id=2, name="normal forms biject onto A_n; defining relations and rule families hold")
    for n in ALT_NS:
        inst = build_alt(n)
        rel = check_defining_relations(inst)
        assert rel.passed and rel.generators_even, n
        bij = alt_bijection_check(inst)
        assert bij.passed, n
        assert bij.n_forms == bij.n_distinct == bij.group_order == factorial(n) // 2
    acceptance_report["detail"] = "n = 3..7"


@pytest.fixture(scope="module")
def verified(hnn_fixtures):
    return {name: verify_hnn_instance(hnn_fixtures[name], ab_bound=3, cd_bound=2) for name in HNN_NAMES}


def test_hnn_verification(acceptance_report, verified):
    acceptance_report.update(id=3, name="HNN fixtures: condition (A) at |a|,|b| <= 3, certified compositions, (B) at |c|,|d| <= 2")
    detail = []
    for name in HNN_NAMES:
        rep = verified[name]
        assert rep.condition_a.passed and rep.condition_a.maxlen == 3, name
        assert rep.gs.cd_bound == 2
        assert all(r.certified for r in rep.gs.results), name
        assert rep.passed
        detail.append(f"{name}: {rep.gs.n_compositions} compositions")
    acceptance_report["detail"] = ", ".join(detail)


def test_britton_oracle(acceptance_report, hnn_fixtures):
    acceptance_report.update(id=4, name="engine normal form = direct Britton reducer, shape conditions hold, words of length <= 6")
    total = 0
    for name in HNN_NAMES:
        inst = hnn_fixtures[name]
        for u in all_words(len(inst.alphabet), 6):
            nf = hnn_normal_form(inst, u)
            assert nf == britton_reduce(inst, u), (name, inst.format(u))
            assert check_britton_shape(inst, nf).passed, (name, inst.format(nf))
            total += 1
    acceptance_report["detail"] = f"{total} words"


def _confluence(p, maxlen, seed):
    rng = random.Random(seed)
    words = list(all_words(len(p.alphabet), maxlen))
    nfs = {}
    for w in words:
        nf = reduce_word(p, w)
        nfs[w] = nf
        for _ in range(2):
            assert reduce_word(p, w, rng=rng) == nf, w
    # polynomial level: idempotence, linearity, random strategy
    alpha = p.alphabet
    for _ in range(300):
        picks = [rng.choice(words) for _ in range(rng.randint(1, 5))]
        cs = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in picks]
        f = Poly(alpha, {})
        expect = Poly(alpha, {})
        for w, c in zip(picks, cs):
            f = f + Poly.word(alpha, w, c)
            expect = expect + Poly.word(alpha, nfs[w], c)
        nf = normal_form(f, p)
        assert nf == expect
        assert normal_form(nf, p) == nf
        assert normal_form(f, p, rng=rng) == nf
    return len(words)


def test_confluence(acceptance_report, hnn_fixtures, verified):
    acceptance_report.update(id=5, name="random strategies agree with the deterministic one on words of length <= 6; idempotent, linear")
    s3 = semigroup_presentation(["a", "b"], [("a a", "1"), ("b b", "1"), ("a b a", "b a b")])
    assert is_gs_basis(s3).passed
    pres = {"S3 Coxeter": s3}
    for name in HNN_NAMES:
        assert verified[name].passed
        pres[name] = hnn_fixtures[name].presentation
    n = sum(_confluence(p, 6, seed) for seed, p in enumerate(pres.values()))
    acceptance_report["detail"] = f"{len(pres)} presentations, {n} words"


def test_completion(acceptance_report, fixtures, tmp_path):
    acceptance_report.update(id=6, name="completion of {a^2-1, b^3-1, abab-1} gives a basis with 6 reduced words, idempotent")
    out = tmp_path / "done.gsp"
    assert main(["complete", str(fixtures / "s3_alt.gsp"), "-o", str(out)]) == 0
    done = load_presentation(out)
    assert is_gs_basis(done).passed
    red = red_enumerate(done)
    assert red.finite and len(red) == 6
    # S3 oracle: a = (1 2), b = (1 2 3); both relations hold and images fill S3
    imgs = {0: (1, 0, 2), 1: (1, 2, 0)}
    for r in done.rules:
        assert evaluate(r.lead, imgs, 3) == evaluate(r.rhs, imgs, 3)
    assert {evaluate(w, imgs, 3) for w in red.words} == set(permutations(range(3)))
    again = shirshov_complete(done)
    assert again.complete and sorted(again.leads()) == sorted(done.leads())
    acceptance_report["detail"] = f"{len(done.rules)} rules"


def test_non_monomial_witness(acceptance_report, hnn_fixtures):
    acceptance_report.update(id=7, name="HNN orders: strict total order on words of length <= 3, monomial law fails")
    detail = []
    for name in HNN_NAMES:
        inst = hnn_fixtures[name]
        rep = order_diagnostics(inst.order, len(inst.alphabet), 3)
        assert rep.axioms_pass, name
        assert rep.monomial_witness is not None, name
        u, v, w1, w2 = rep.monomial_witness
        key = inst.order.key
        assert key(u) > key(v) and not key(w1 + u + w2) > key(w1 + v + w2)
        detail.append(f"{name}: {inst.format(u)} > {inst.format(v)} in context ({inst.format(w1)}, {inst.format(w2)})")
    acceptance_report["detail"] = "; ".join(detail)


def test_negative_controls(acceptance_report):
    acceptance_report.update(id=8, name="negative controls: drop the x2 x1 x2 braid rules, drop b^2-1, corrupted group table")
    rep = verify_alt_gsb(build_alt(4, drop=("x2-x1-braid",)))
    assert not rep.passed and any(r for r in rep.residues)
    s3 = semigroup_presentation(["a", "b"], [("a a", "1"), ("a b a", "b a b")])
    gs = is_gs_basis(s3)
    assert not gs.passed and gs.residues
    names = ["e", "a", "a2", "a3"]
    table = [[names[(i + j) % 4] for j in range(4)] for i in range(4)]
    table[1][1] = "a3"
    with pytest.raises(GroupAxiomError) as exc:
        group_from_table(names, table)
    assert exc.value.axiom and exc.value.witness
    acceptance_report["detail"] = f"table axiom {exc.value.axiom} at {exc.value.witness}"

"""Gröbner–Shirshov engine: reduction, compositions, verification, completion.

A :class:`Presentation` bundles an alphabet, monic rules and a word order.
Rules whose remainder is a single word with coefficient 1 (``u - v``
relations) take a fast word-rewriting path; everything else goes through
general polynomial reduction.  Both paths reduce the order-greatest
reducible word first and within a word the leftmost, shortest occurrence of
a leading word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .freealg import Alphabet, Poly, Word, all_words, occurrences
from .orders import WordOrder

DEFAULT_STEPS = 100_000


class BudgetExceeded(RuntimeError):
    """An explicit work bound was hit; distinct from a property failing."""


class NonMonomialOrder(ValueError):
    pass


@dataclass(frozen=True)
class Rule:
    poly: Poly
    lead: Word
    remainder: Poly  # lead - poly: the rewrite reads lead -> remainder
    rhs: Word | None  # the single remainder word for u - v relations

    @classmethod
    def from_poly(cls, f: Poly, order: WordOrder) -> "Rule | None":
        """Monic rule from a nonzero polynomial; ``None`` for zero."""
        if f.is_zero():
            return None
        f = f.monic(order)
        lead = f.leading_word(order)
        rem = Poly.word(f.alphabet, lead) - f
        rhs = None
        if len(rem) == 1:
            (w, c), = rem.items()
            if c == 1:
                rhs = w
        return cls(f, lead, rem, rhs)

    @property
    def is_semigroup(self) -> bool:
        return self.rhs is not None


class Presentation:
    """Alphabet, rules and order: the algebra k<X | S>."""

    def __init__(self, alphabet: Alphabet, relations: Iterable, order: WordOrder, *, complete: bool | None = None):
        self.alphabet = alphabet
        self.order = order
        rules = []
        for r in relations:
            if isinstance(r, Poly):
                if r.alphabet != alphabet:
                    raise ValueError("relation over a different alphabet")
                r = Rule.from_poly(r, order)
                if r is None:
                    continue  # degenerate relation
            rules.append(r)
        self.rules: tuple[Rule, ...] = tuple(rules)
        self.complete = complete
        self.hnn_source: str | None = None  # group file behind an HNN order, for emission
        by_lead: dict[Word, int] = {}
        for i, r in enumerate(self.rules):
            by_lead.setdefault(r.lead, i)
        self.by_lead = by_lead
        self.lead_lengths = tuple(sorted({len(w) for w in by_lead}))
        self.semigroup = all(r.is_semigroup for r in self.rules)

    def __len__(self):
        return len(self.rules)

    def __repr__(self):
        return f"Presentation({len(self.alphabet)} letters, {len(self.rules)} rules, {self.order!r})"

    def with_relations(self, relations: Iterable) -> "Presentation":
        return Presentation(self.alphabet, relations, self.order)

    def leads(self) -> list[Word]:
        return [r.lead for r in self.rules]

    def find_occurrence(self, w: Word) -> tuple[int, int] | None:
        """Leftmost, shortest ``(position, rule index)`` of a leading word in ``w``."""
        by_lead = self.by_lead
        lengths = self.lead_lengths
        n = len(w)
        if lengths and lengths[0] == 0:
            return (0, by_lead[()])
        for i in range(n):
            for L in lengths:
                if i + L > n:
                    break
                ri = by_lead.get(w[i:i + L])
                if ri is not None:
                    return (i, ri)
        return None

    def all_occurrences(self, w: Word) -> list[tuple[int, int]]:
        out = []
        n = len(w)
        for i in range(n + 1):
            for L in self.lead_lengths:
                if i + L > n:
                    break
                seg = w[i:i + L]
                for ri, r in enumerate(self.rules):
                    if r.lead == seg:
                        out.append((i, ri))
        return out

    def is_reduced(self, w: Word) -> bool:
        return self.find_occurrence(w) is None

    def format_rule(self, r: Rule) -> str:
        a = self.alphabet
        if r.rhs is not None:
            return f"{a.format_word(r.lead)} = {a.format_word(r.rhs)}"
        return f"{r.poly.format(self.order)} = 0"


# reduction


def elw_step(f: Poly, rule: Rule, a: Word, b: Word, order: WordOrder | None = None, full: bool = False) -> Poly:
    """Eliminate the occurrence ``a . lead(rule) . b`` from ``f``.

    Without ``full`` the occurrence must be the leading word of ``f``
    (``order`` required); with ``full`` any word of the support will do.
    """
    target = tuple(a) + rule.lead + tuple(b)
    if full:
        if target not in f:
            raise ValueError("occurrence is not in the support")
    else:
        if order is None:
            raise ValueError("order required to locate the leading word")
        if f.is_zero() or f.leading_word(order) != target:
            raise ValueError("occurrence is not the leading word")
    c = f[target]
    return f - rule.poly.sandwich(tuple(a), tuple(b)).scale(c)


def _rewrite_word(p: Presentation, w: Word, coeff, trace, budget: int, rng) -> Word:
    rules = p.rules
    steps = 0
    while True:
        if rng is None:
            occ = p.find_occurrence(w)
        else:
            occs = p.all_occurrences(w)
            occ = rng.choice(occs) if occs else None
        if occ is None:
            return w
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"word reduction exceeded {budget} steps")
        pos, ri = occ
        r = rules[ri]
        a, b = w[:pos], w[pos + len(r.lead):]
        if trace is not None:
            trace.append((coeff, a, ri, b))
        w = a + r.rhs + b


def reduce_word(p: Presentation, w: Word, budget: int = DEFAULT_STEPS, rng: random.Random | None = None) -> Word:
    """Normal form of a single word under semigroup rules."""
    if not p.semigroup:
        nf = normal_form(Poly.word(p.alphabet, w), p, budget=budget, rng=rng)
        if len(nf) != 1 or next(iter(nf.items()))[1] != 1:
            raise ValueError("normal form of a word is not a single word")
        return next(iter(nf))
    return _rewrite_word(p, tuple(w), 1, None, budget, rng)


def normal_form(
    f: Poly,
    p: Presentation,
    budget: int = DEFAULT_STEPS,
    rng: random.Random | None = None,
    trace: list | None = None,
) -> Poly:
    """Reduce ``f`` until no support word contains a leading word.

    ``trace`` (if given) receives ``(coeff, a, rule index, b)`` per step, so
    that ``f - result = sum(coeff * a * rule.poly * b)``.  ``rng`` switches
    to random choices of word and occurrence.
    """
    if f.alphabet != p.alphabet:
        raise ValueError("polynomial and presentation use different alphabets")
    if not p.rules:
        return f
    if p.semigroup and len(f) == 1:
        (w, c), = f.items()
        return Poly.word(p.alphabet, _rewrite_word(p, w, c, trace, budget, rng), c)
    key = p.order.key
    terms = dict(f.items())
    steps = 0
    while terms:
        if rng is None:
            target = occ = None
            for w in sorted(terms, key=key, reverse=True):
                occ = p.find_occurrence(w)
                if occ is not None:
                    target = w
                    break
            if target is None:
                break
        else:
            cands = [(w, o) for w in sorted(terms, key=key) for o in p.all_occurrences(w)]
            if not cands:
                break
            target, occ = rng.choice(cands)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"reduction exceeded {budget} steps")
        pos, ri = occ
        r = p.rules[ri]
        a, b = target[:pos], target[pos + len(r.lead):]
        c = terms.pop(target)
        if trace is not None:
            trace.append((c, a, ri, b))
        for u, d in r.remainder.items():
            w = a + u + b
            s = terms.get(w, 0) + c * d
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
    return Poly(p.alphabet, terms)


def expand_trace(p: Presentation, trace: Sequence) -> Poly:
    """``sum(coeff * a * rule.poly * b)`` over trace items."""
    total = Poly.zero(p.alphabet)
    for c, a, ri, b in trace:
        total = total + p.rules[ri].poly.sandwich(a, b).scale(c)
    return total


# compositions

INTERSECTION, INCLUSION = "intersection", "inclusion"


@dataclass(frozen=True)
class CompositionItem:
    w: Word
    kind: str
    value: Poly
    i: int  # rule f
    j: int  # rule g
    a: Word
    b: Word


def find_compositions(p: Presentation) -> list[CompositionItem]:
    """All intersection and inclusion compositions over ordered rule pairs.

    Intersections need a proper overlap (both offsets nonempty); the cases
    with an empty offset are inclusions.  Sorted by ``w`` under the order,
    then kind and source indices.
    """
    rules = p.rules
    out = []
    prefixes: dict[Word, list[int]] = {}
    for j, g in enumerate(rules):
        for ell in range(1, len(g.lead)):
            prefixes.setdefault(g.lead[:ell], []).append(j)
    for i, f in enumerate(rules):
        fl = f.lead
        for ell in range(1, len(fl)):
            for j in prefixes.get(fl[len(fl) - ell:], ()):
                g = rules[j]
                if ell >= len(g.lead):
                    continue
                a = fl[:len(fl) - ell]
                b = g.lead[ell:]
                w = fl + b
                value = f.poly.rmul(b) - g.poly.lmul(a)
                out.append(CompositionItem(w, INTERSECTION, value, i, j, a, b))
        for j, g in enumerate(rules):
            gl = g.lead
            if len(gl) > len(fl):
                continue
            for pos in occurrences(fl, gl):
                a, b = fl[:pos], fl[pos + len(gl):]
                if i == j and not a and not b:
                    continue
                value = f.poly - g.poly.sandwich(a, b)
                out.append(CompositionItem(fl, INCLUSION, value, i, j, a, b))
    key = p.order.key
    out.sort(key=lambda c: (key(c.w), c.kind, c.i, c.j, len(c.a)))
    return out


@dataclass
class TrivialityResult:
    item: CompositionItem
    certified: bool
    certificate: list  # (coeff, a, rule index, b)
    residue: Poly
    order_violation: tuple | None = None  # certificate item not below w
    context_violation: tuple | None = None  # (item index, c, d) breaking c a lead b d < c w d


def check_triviality(item: CompositionItem, p: Presentation, budget: int = DEFAULT_STEPS) -> TrivialityResult:
    """Reduce the composition value, recording every elimination step.

    Certified iff the value reduces to 0 and every recorded ``a . lead . b``
    is below ``w``.  A nonzero residue is a new rule candidate.
    """
    trace: list = []
    residue = normal_form(item.value, p, budget=budget, trace=trace)
    res = TrivialityResult(item, False, trace, residue)
    if residue:
        return res
    key = p.order.key
    kw = key(item.w)
    for n, (c, a, ri, b) in enumerate(trace):
        if not key(a + p.rules[ri].lead + b) < kw:
            res.order_violation = (n, a, ri, b)
            return res
    res.certified = True
    return res


@dataclass
class GSReport:
    passed: bool
    n_rules: int
    n_compositions: int
    results: list = field(repr=False)
    cd_bound: int | None = None

    @property
    def failures(self) -> list[TrivialityResult]:
        return [r for r in self.results if not r.certified]

    @property
    def residues(self) -> list[Poly]:
        return [r.residue for r in self.results if r.residue]


def _check_contexts(p: Presentation, res: TrivialityResult, contexts: list[Word]) -> None:
    key = p.order.key
    w = res.item.w
    leads = [a + p.rules[ri].lead + b for _, a, ri, b in res.certificate]
    if not leads:
        return
    for c in contexts:
        for d in contexts:
            kw = key(c + w + d)
            for n, u in enumerate(leads):
                if not key(c + u + d) < kw:
                    res.certified = False
                    res.context_violation = (n, c, d)
                    return


def is_gs_basis(
    p: Presentation,
    cd_bound: int | None = None,
    budget: int = DEFAULT_STEPS,
    stop_on_failure: bool = False,
) -> GSReport:
    """Check every composition is trivial modulo the rules.

    For non-monomial orders each certificate item must in addition stay
    below ``w`` inside every context ``c . _ . d`` with ``|c|, |d| <= cd_bound``
    (default 2).
    """
    comps = find_compositions(p)
    contexts = None
    if not p.order.monomial:
        if cd_bound is None:
            cd_bound = 2
        contexts = list(all_words(len(p.alphabet), cd_bound))
    results = []
    ok = True
    for item in comps:
        res = check_triviality(item, p, budget=budget)
        if res.certified and contexts is not None:
            _check_contexts(p, res, contexts)
        results.append(res)
        if not res.certified:
            ok = False
            if stop_on_failure:
                break
    return GSReport(ok, len(p.rules), len(comps), results, cd_bound if contexts is not None else None)


@dataclass
class ConditionAReport:
    passed: bool
    maxlen: int
    checked: int
    witness: tuple | None = None  # (rule index, a, b, offending word u)


def check_condition_A(p: Presentation, maxlen: int, budget: int = 10**9) -> ConditionAReport:
    """Leading words stay leading inside every context ``a . _ . b``, ``|a|, |b| <= maxlen``."""
    contexts = list(all_words(len(p.alphabet), maxlen))
    work = sum(len(r.remainder) for r in p.rules) * len(contexts) ** 2
    if work > budget:
        raise BudgetExceeded(f"condition (A) check needs {work} comparisons (budget {budget})")
    rep = ConditionAReport(True, maxlen, 0)
    key = p.order.key
    for ri, r in enumerate(p.rules):
        lead = r.lead
        others = list(r.remainder)
        if not others:
            continue
        for a in contexts:
            for b in contexts:
                kl = key(a + lead + b)
                for u in others:
                    rep.checked += 1
                    if not key(a + u + b) < kl:
                        rep.passed = False
                        rep.witness = (ri, a, b, u)
                        return rep
    return rep


# completion


def interreduce(polys: Iterable[Poly], alphabet: Alphabet, order: WordOrder, budget: int = DEFAULT_STEPS) -> list[Poly]:
    """Monic, mutually reduced generators of the same ideal, sorted by leading word."""
    key = order.key
    current: list[Poly] = []
    seen = set()
    for f in polys:
        if f:
            m = f.monic(order)
            if m not in seen:
                seen.add(m)
                current.append(m)
    changed = True
    while changed:
        changed = False
        current.sort(key=lambda f: key(f.leading_word(order)))
        for i, f in enumerate(current):
            rest = Presentation(alphabet, current[:i] + current[i + 1:], order)
            nf = normal_form(f, rest, budget=budget)
            if nf != f:
                del current[i]
                if nf:
                    nf = nf.monic(order)
                    if nf not in current:
                        current.append(nf)
                changed = True
                break
    current.sort(key=lambda f: key(f.leading_word(order)))
    return current


def shirshov_complete(
    p: Presentation,
    max_rules: int = 500,
    max_degree: int | None = None,
    max_iterations: int = 100,
    budget: int = DEFAULT_STEPS,
) -> Presentation:
    """Add nontrivial composition residues until every composition is trivial.

    Returns an inter-reduced presentation whose ``complete`` flag is False
    when a budget stopped the process early.  Only for monomial orders.
    """
    if not p.order.monomial:
        raise NonMonomialOrder("completion requires a monomial order")
    alphabet, order = p.alphabet, p.order
    polys = interreduce([r.poly for r in p.rules], alphabet, order, budget)
    for _ in range(max_iterations):
        cur = Presentation(alphabet, polys, order)
        added = False
        for item in find_compositions(cur):
            residue = normal_form(item.value, cur, budget=budget)
            if not residue:
                continue
            residue = residue.monic(order)
            if max_degree is not None and len(residue.leading_word(order)) > max_degree:
                return Presentation(alphabet, polys, order, complete=False)
            polys = interreduce(polys + [residue], alphabet, order, budget)
            if len(polys) > max_rules:
                return Presentation(alphabet, polys, order, complete=False)
            cur = Presentation(alphabet, polys, order)
            added = True
        if not added:
            return Presentation(alphabet, polys, order, complete=True)
    return Presentation(alphabet, polys, order, complete=False)


# Red(S)


@dataclass
class RedResult:
    words: list
    finite: bool
    maxlen_reached: int

    def __len__(self):
        return len(self.words)


def red_enumerate(p: Presentation, maxlen: int | None = None, max_words: int = 2_000_000) -> RedResult:
    """Words avoiding every leading word, breadth-first by length.

    The set is closed under subwords, so an empty level proves it finite.
    """
    if () in p.by_lead:
        return RedResult([], True, 0)
    by_lead = p.by_lead
    lengths = p.lead_lengths
    n = len(p.alphabet)
    words = [()]
    level = [()]
    length = 0
    while level:
        if maxlen is not None and length >= maxlen:
            return RedResult(words, False, length)
        nxt = []
        for w in level:
            for x in range(n):
                u = w + (x,)
                m = len(u)
                if any(L <= m and u[m - L:] in by_lead for L in lengths):
                    continue
                nxt.append(u)
        length += 1
        words.extend(nxt)
        if len(words) > max_words:
            if maxlen is None:
                raise BudgetExceeded(f"more than {max_words} reduced words and no length bound given")
            return RedResult(words, False, length)
        level = nxt
    return RedResult(words, True, length - 1)


# bounded Composition-Diamond cross-check


@dataclass
class CDReport:
    passed: bool
    maxdeg: int
    n_words: int
    n_images: int
    idempotent: bool = True
    reduced_images: bool = True
    linear: bool = True
    witness: object = None


def cd_crosscheck(p: Presentation, maxdeg: int, samples: int = 200, seed: int = 0, budget: int = DEFAULT_STEPS) -> CDReport:
    """Normal form is an idempotent linear projection onto span Red(S), up to ``maxdeg``."""
    alphabet = p.alphabet
    words = list(all_words(len(alphabet), maxdeg))
    images = set()
    rep = CDReport(True, maxdeg, len(words), 0)
    nfs = {}
    for w in words:
        nf = normal_form(Poly.word(alphabet, w), p, budget=budget)
        nfs[w] = nf
        for u in nf:
            images.add(u)
            if not p.is_reduced(u):
                rep.passed = rep.reduced_images = False
                rep.witness = (w, u)
        if normal_form(nf, p, budget=budget) != nf:
            rep.passed = rep.idempotent = False
            rep.witness = (w,)
    rep.n_images = len(images)
    rng = random.Random(seed)
    for _ in range(samples if words else 0):
        k = rng.randint(1, 4)
        picked = [rng.choice(words) for _ in range(k)]
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(k)]
        f = Poly.zero(alphabet)
        expected = Poly.zero(alphabet)
        for w, c in zip(picked, coeffs):
            f = f + Poly.word(alphabet, w, c)
            expected = expected + nfs[w].scale(c)
        if normal_form(f, p, budget=budget) != expected:
            rep.passed = rep.linear = False
            rep.witness = (picked, coeffs)
            break
    return rep

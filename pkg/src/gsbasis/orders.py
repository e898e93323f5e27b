"""Word orders: deg-lex and the stable-letter weight order for HNN extensions.

Every order exposes ``key(word)``; comparing keys as Python tuples is the
order itself, so sorting and ``max`` work directly.  ``compare`` returns
-1, 0 or 1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from .freealg import Word, all_words
from .groups import CosetData, FiniteGroup

LESS, EQUAL, GREATER = -1, 0, 1


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


class WordOrder:
    monomial: bool = True

    def key(self, w: Word):
        raise NotImplementedError

    def compare(self, u: Word, v: Word) -> int:
        return _cmp(self.key(u), self.key(v))

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def max(self, words):
        return max(words, key=self.key)

    def sorted(self, words, reverse=False):
        return sorted(words, key=self.key, reverse=reverse)


class DegLex(WordOrder):
    """Length first, then lexicographic by letter rank.

    ``ranking`` lists letter indices from least to greatest; by default the
    alphabet listing order.
    """

    monomial = True

    def __init__(self, n_letters: int, ranking: Sequence[int] | None = None):
        self.n_letters = n_letters
        if ranking is None:
            self.rank = None
        else:
            if sorted(ranking) != list(range(n_letters)):
                raise ValueError("ranking must be a permutation of the letters")
            rank = [0] * n_letters
            for r, x in enumerate(ranking):
                rank[x] = r
            self.rank = tuple(rank)

    def key(self, w: Word):
        if self.rank is None:
            return (len(w), w)
        rank = self.rank
        return (len(w), tuple(rank[x] for x in w))

    def __eq__(self, other):
        return isinstance(other, DegLex) and (self.n_letters, self.rank) == (other.n_letters, other.rank)

    def __hash__(self):
        return hash((self.n_letters, self.rank))

    def __repr__(self):
        return "DegLex()" if self.rank is None else f"DegLex(ranking={self.rank})"


def deglex_compare(u: Word, v: Word, ranking: Sequence[int]) -> int:
    """Compare words by degree, then lexicographically by ``ranking`` (least first)."""
    rank = {x: r for r, x in enumerate(ranking)}
    try:
        ku = (len(u), [rank[x] for x in u])
        kv = (len(v), [rank[x] for x in v])
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside ranking") from None
    return _cmp(ku, kv)


# group-element orders

ABSOLUTE, A_ORDER, B_ORDER = "absolute", "A", "B"


def element_key(g: int, mode: str, ctx: CosetData | None = None):
    """Sort key of a group element under the absolute, A- or B-order.

    Coset representatives are ranked by their absolute order, so the pair
    (representative, remainder) compares by plain element indices.
    """
    if mode == ABSOLUTE:
        return g
    if ctx is None:
        raise ValueError(f"{mode}-order needs coset data")
    if not 0 <= g < len(ctx.decompose):
        raise ValueError(f"element {g} not in group")
    return ctx.decompose[g]


def element_compare(g: int, h: int, mode: str = ABSOLUTE, ctx: CosetData | None = None) -> int:
    if mode == ABSOLUTE:
        if ctx is not None:
            n = len(ctx.decompose)
            if not (0 <= g < n and 0 <= h < n):
                raise ValueError("element not in group")
        return _cmp(g, h)
    return _cmp(element_key(g, mode, ctx), element_key(h, mode, ctx))


def segment_key(seg: Sequence[int], mode: str, ctx: CosetData | None = None):
    """Key of a word over G\\{1} (group element indices) under deg-lex / deg-lex_A / deg-lex_B."""
    if not seg:
        return (0,)
    if mode == ABSOLUTE:
        return (len(seg), tuple(seg))
    return (len(seg), tuple(seg[:-1]), element_key(seg[-1], mode, ctx))


def segment_compare(u: Sequence[int], v: Sequence[int], mode: str = ABSOLUTE, ctx: CosetData | None = None) -> int:
    for x in (*u, *v):
        if x < 0:
            raise ValueError("stable letter inside a G-segment")
    return _cmp(segment_key(u, mode, ctx), segment_key(v, mode, ctx))


# HNN weight order

T_POS, T_NEG = -1, -2  # element codes for t and t^-1


@dataclass(frozen=True)
class WeightTuple:
    """``u = u_1 t^e_1 ... u_k t^e_k u_{k+1}`` split into its parts (as letters)."""

    k: int
    exponents: tuple
    segments: tuple
    tail: tuple

    def reassemble(self, t_letter: int, tinv_letter: int) -> Word:
        out: list = []
        for seg, e in zip(self.segments, self.exponents):
            out.extend(seg)
            out.append(t_letter if e == 1 else tinv_letter)
        out.extend(self.tail)
        return tuple(out)


class HnnOrder(WordOrder):
    """The non-monomial order on words over G\\{1} plus t, t^-1.

    ``letter_elem[x]`` is the group element of letter ``x`` or T_POS/T_NEG.
    Words compare by the number of stable letters, then the exponent
    sequence (t > t^-1), then segment i under the A-order when its following
    stable letter is t and the B-order when it is t^-1, then the tail under
    absolute deg-lex.
    """

    monomial = False

    def __init__(self, group: FiniteGroup, cos_a: CosetData, cos_b: CosetData, letter_elem: Sequence[int]):
        self.group = group
        self.cos_a = cos_a
        self.cos_b = cos_b
        self.letter_elem = tuple(letter_elem)
        self.t_letter = self.letter_elem.index(T_POS)
        self.tinv_letter = self.letter_elem.index(T_NEG)
        elem = self.letter_elem
        # per-letter keys; the last letter of a segment uses the A/B key
        self._abs = tuple(e for e in elem)
        self._akey = tuple(cos_a.decompose[e] if e >= 0 else None for e in elem)
        self._bkey = tuple(cos_b.decompose[e] if e >= 0 else None for e in elem)

    def weight(self, w: Word) -> WeightTuple:
        return hnn_weight(w, self.t_letter, self.tinv_letter)

    def key(self, w: Word):
        t, ti = self.t_letter, self.tinv_letter
        absk = self._abs
        exps = []
        segs = []
        start = 0
        for i, x in enumerate(w):
            if x == t or x == ti:
                if i == start:
                    segs.append((0,))
                else:
                    last = w[i - 1]
                    lk = self._akey[last] if x == t else self._bkey[last]
                    segs.append((i - start, tuple(absk[y] for y in w[start:i - 1]), lk))
                exps.append(1 if x == t else 0)
                start = i + 1
        tail = tuple(absk[y] for y in w[start:])
        return (len(exps), tuple(exps), tuple(segs), (len(tail), tail))

    def __repr__(self):
        return f"HnnOrder(|G|={self.group.order})"


def hnn_weight(w: Word, t_letter: int, tinv_letter: int) -> WeightTuple:
    exps, segs = [], []
    start = 0
    for i, x in enumerate(w):
        if x == t_letter or x == tinv_letter:
            segs.append(tuple(w[start:i]))
            exps.append(1 if x == t_letter else -1)
            start = i + 1
    return WeightTuple(len(exps), tuple(exps), tuple(segs), tuple(w[start:]))


def hnn_compare(u: Word, v: Word, order: HnnOrder) -> int:
    n = len(order.letter_elem)
    for x in (*u, *v):
        if not 0 <= x < n:
            raise ValueError(f"foreign letter {x!r}")
    return order.compare(u, v)


# diagnostics


class OrderBudgetExceeded(RuntimeError):
    pass


@dataclass
class OrderReport:
    n_words: int
    totality: bool = True
    antisymmetry: bool = True
    transitivity: bool = True
    axiom_witness: tuple | None = None
    monomial_witness: tuple | None = None  # (u, v, w1, w2): u > v but not w1 u w2 > w1 v w2

    @property
    def axioms_pass(self) -> bool:
        return self.totality and self.antisymmetry and self.transitivity


def order_diagnostics(order: WordOrder, n_letters: int, maxlen: int, budget: int = 5 * 10**8) -> OrderReport:
    """Exhaustive strict-total-order check and monomiality-witness search.

    Words are sorted with ``compare`` and every pair is re-checked against
    its sorted position; a relation passing that check is exactly the linear
    order of the sorted list, which settles antisymmetry, totality and
    transitivity on the whole sample in O(n^2) comparisons.  For each
    context ``(w1, w2)`` the monomial law holds iff ``w1 . w2`` is strictly
    increasing along the sorted list.
    """
    words = list(all_words(n_letters, maxlen))
    n = len(words)
    # pair checks plus one pass over the sorted list per context
    if n ** 3 > budget:
        raise OrderBudgetExceeded(f"{n} words exceeds the diagnostic budget")
    rep = OrderReport(n)
    for u in words:
        if order.compare(u, u) != EQUAL:
            rep.antisymmetry = False
            rep.axiom_witness = (u, u)
            return rep
    ordered = sorted(words, key=functools.cmp_to_key(order.compare))
    for i in range(n):
        for j in range(i + 1, n):
            c = order.compare(ordered[i], ordered[j])
            r = order.compare(ordered[j], ordered[i])
            if c == EQUAL or r == EQUAL:
                rep.totality = False
                rep.axiom_witness = (ordered[i], ordered[j])
                return rep
            if c != -r:
                rep.antisymmetry = False
                rep.axiom_witness = (ordered[i], ordered[j])
                return rep
            if c != LESS:
                rep.transitivity = False
                rep.axiom_witness = (ordered[i], ordered[j])
                return rep
    key = order.key
    for w1, w2 in _contexts(n_letters, maxlen):
        prev = key(w1 + ordered[0] + w2) if n else None
        for i in range(1, n):
            cur = key(w1 + ordered[i] + w2)
            if not cur > prev:
                rep.monomial_witness = (ordered[i], ordered[i - 1], w1, w2)
                return rep
            prev = cur
    return rep


def _contexts(n_letters: int, maxlen: int):
    words = list(all_words(n_letters, maxlen))
    # by total context length so short witnesses come first
    pairs = ((a, b) for a in words for b in words)
    return sorted(pairs, key=lambda p: (len(p[0]) + len(p[1]), len(p[0]), p))

"""The alternating group A_n on the generators x_i = (1 2)(i+1 i+2).

Alphabet, least to greatest: ``x1- x1 x2 ... x{n-2}``.  Letter index 0 is
x1^-1 and letter i is x_i, so deg-lex by letter index is the required order.
Permutations compose left to right: the word ``u v`` acts as u, then v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .freealg import Alphabet, Poly, Word
from .groups import compose, group_from_permutations, perm_inverse, perm_sign
from .orders import DegLex
from .rewrite import GSReport, Presentation, RedResult, is_gs_basis, normal_form, red_enumerate

X1INV = 0

# rule families, eps ranging over +1 and -1:
#   x1-square    x1^(2 eps) = x1^(-eps)
#   square       x_i x_i = 1                          (i >= 2)
#   commute      x_j x_i = x_i x_j                    (j - 1 > i >= 2)
#   x1-commute   x_j x1^eps = x1^(-eps) x_j           (j >= 3)
#   run          x_j..x_i x_j = x_(j-1) x_j..x_i      (j > i >= 2)
#   x1-run       x_j..x_2 x1^eps x_j = x_(j-1) x_j..x_2 x1^(-eps)   (j >= 3)
#   x2-x1-braid  x2 x1^eps x2 = x1^(-eps) x2 x1^(-eps)
#   x1-inverse   x1^eps x1^(-eps) = 1
FAMILIES = ("x1-square", "square", "commute", "x1-commute", "run", "x1-run", "x2-x1-braid", "x1-inverse")


def x(i: int, eps: int = 1) -> int:
    """Letter of x_i (or x_1^-1 when ``i == 1`` and ``eps == -1``)."""
    if eps == -1:
        if i != 1:
            raise ValueError("only x1 has a formal inverse letter")
        return X1INV
    return i


def run(j: int, i: int) -> Word:
    """x_j x_{j-1} ... x_i for j >= i >= 2."""
    return tuple(range(j, i - 1, -1))


def run1(j: int, eps: int) -> Word:
    """x_j x_{j-1} ... x_2 x_1^eps."""
    return tuple(range(j, 1, -1)) + (x(1, eps),)


@dataclass(frozen=True)
class AltInstance:
    n: int
    alphabet: Alphabet
    order: DegLex
    jacobson: Presentation = field(repr=False)
    jacobson_relations: tuple = field(repr=False)  # (lhs word, rhs word)
    gsbasis: Presentation = field(repr=False)
    families: tuple = field(repr=False)  # (family, lhs word, rhs word) per gsbasis rule
    generators: tuple = field(repr=False)  # permutation per letter

    @property
    def order_size(self) -> int:
        return factorial(self.n) // 2

    def parse(self, text: str) -> Word:
        return self.alphabet.parse_word(text)

    def format(self, w: Word) -> str:
        return self.alphabet.format_word(w)


def alt_alphabet(n: int) -> Alphabet:
    names = ["x1-"] + [f"x{i}" for i in range(1, n - 1)]
    return Alphabet(names, [("x1", "x1-")])


def gs_relations(n: int) -> list[tuple[str, Word, Word]]:
    """Every rule family expanded over both signs and every index range."""
    m = n - 2  # largest generator index
    rels = []
    for e in (1, -1):
        rels.append(("x1-square", (x(1, e), x(1, e)), (x(1, -e),)))
    for i in range(2, m + 1):
        rels.append(("square", (i, i), ()))
    for j in range(2, m + 1):
        for i in range(2, j - 1):
            rels.append(("commute", (j, i), (i, j)))
    for j in range(3, m + 1):
        for e in (1, -1):
            rels.append(("x1-commute", (j, x(1, e)), (x(1, -e), j)))
    for j in range(3, m + 1):
        for i in range(2, j):
            rels.append(("run", run(j, i) + (j,), (j - 1,) + run(j, i)))
    for j in range(3, m + 1):
        for e in (1, -1):
            rels.append(("x1-run", run1(j, e) + (j,), (j - 1,) + run1(j, -e)))
    if m >= 2:
        for e in (1, -1):
            rels.append(("x2-x1-braid", (2, x(1, e), 2), (x(1, -e), 2, x(1, -e))))
    for e in (1, -1):
        rels.append(("x1-inverse", (x(1, e), x(1, -e)), ()))
    return rels


def jacobson_relations(n: int) -> list[tuple[Word, Word]]:
    """The defining relations, with x1 x1^-1 = x1^-1 x1 = 1 for the inverse letter."""
    m = n - 2
    rels = [((1, X1INV), ()), ((X1INV, 1), ()), ((1, 1, 1), ())]
    for i in range(2, m + 1):
        rels.append(((i - 1, i) * 3, ()))
        rels.append(((i, i), ()))
    for j in range(3, m + 1):
        for i in range(1, j - 1):
            rels.append(((i, j) * 2, ()))
    return rels


def generator_perms(n: int) -> tuple:
    """Permutation (0-based points) of each letter; x_i = (1 2)(i+1 i+2) read left to right."""
    def transposition(a, b):
        p = list(range(n))
        p[a - 1], p[b - 1] = b - 1, a - 1
        return tuple(p)

    perms = [None] * (n - 1)
    for i in range(1, n - 1):
        perms[i] = compose(transposition(1, 2), transposition(i + 1, i + 2))
    perms[X1INV] = perm_inverse(perms[1])
    return tuple(perms)


def build_alt(n: int, drop: tuple = ()) -> AltInstance:
    """A_n presentations.  ``drop`` lists family names or (family, index within family) pairs to omit."""
    if n < 3:
        raise ValueError("n must be at least 3")
    alphabet = alt_alphabet(n)
    order = DegLex(len(alphabet))
    fams = []
    seen: dict[str, int] = {}
    for fam, lhs, rhs in gs_relations(n):
        k = seen.get(fam, 0)
        seen[fam] = k + 1
        if fam in drop or (fam, k) in drop:
            continue
        fams.append((fam, lhs, rhs))
    gs = Presentation(alphabet, [Poly.binomial(alphabet, l, r) for _, l, r in fams], order)
    for r, (_, lhs, _) in zip(gs.rules, fams):
        assert r.lead == lhs
    jac = jacobson_relations(n)
    jp = Presentation(alphabet, [Poly.binomial(alphabet, l, r) for l, r in jac], order)
    return AltInstance(n, alphabet, order, jp, tuple(jac), gs, tuple(fams), generator_perms(n))


@dataclass
class AltReport:
    passed: bool
    gs: GSReport
    membership: list  # (lhs, rhs, residue) for defining relations not reducing to 0

    @property
    def residues(self) -> list[Poly]:
        return self.gs.residues + [r for _, _, r in self.membership]


def verify_alt_gsb(inst: AltInstance) -> AltReport:
    """The rule set is a GS basis and every defining relation reduces to 0 modulo it.

    The second half ties the basis to A_n: without it, a trimmed rule set
    can be a perfectly good GS basis of some other monoid.
    """
    gs = is_gs_basis(inst.gsbasis)
    missing = []
    for lhs, rhs in inst.jacobson_relations:
        res = normal_form(Poly.binomial(inst.alphabet, lhs, rhs), inst.gsbasis)
        if res:
            missing.append((lhs, rhs, res))
    return AltReport(gs.passed and not missing, gs, missing)


@dataclass
class AltEnumeration:
    words: list
    finite: bool
    shapes: list  # factor decomposition per word, None when it does not fit

    @property
    def count(self) -> int:
        return len(self.words)

    @property
    def shape_mismatches(self) -> list:
        return [w for w, s in zip(self.words, self.shapes) if s is None]


def factor_shape(inst: AltInstance, w: Word):
    """Split ``w`` into blocks x_{1 j_1} ... x_{n-2, j_{n-2}}.

    Block i is empty or a descending run x_i x_{i-1} ... stopping anywhere
    at or above x_2, or running down to x_1^{+-1}; that is i + 2 choices.
    Returns the list of blocks, or None if ``w`` does not factor this way.
    """
    m = inst.n - 2
    blocks = [()] * m
    pos = 0
    L = len(w)
    for i in range(1, m + 1):
        if pos >= L:
            break
        head = w[pos]
        if i == 1:
            if head in (1, X1INV):
                blocks[0] = (head,)
                pos += 1
            continue
        if head != i:
            continue
        blk = [i]
        pos += 1
        nxt = i - 1
        while pos < L and nxt >= 1:
            c = w[pos]
            if nxt >= 2 and c == nxt:
                blk.append(c)
                pos += 1
                nxt -= 1
            elif nxt == 1 and c in (1, X1INV):
                blk.append(c)
                pos += 1
                nxt = 0
            else:
                break
        blocks[i - 1] = tuple(blk)
    if pos != L:
        return None
    return blocks


def enumerate_alt_normal_forms(inst: AltInstance) -> AltEnumeration:
    res: RedResult = red_enumerate(inst.gsbasis)
    shapes = [factor_shape(inst, w) for w in res.words]
    return AltEnumeration(res.words, res.finite, shapes)


def eval_word(inst: AltInstance, u: Word) -> tuple:
    p = tuple(range(inst.n))
    gens = inst.generators
    for letter in u:
        p = compose(p, gens[letter])
    return p


@dataclass
class RelationCheck:
    passed: bool
    generators_even: bool
    failures: list  # (source, lhs, rhs)
    checked: int


def check_defining_relations(inst: AltInstance) -> RelationCheck:
    """Both sides of every defining relation and every basis rule agree as permutations."""
    fails = []
    checked = 0
    for lhs, rhs in inst.jacobson_relations:
        checked += 1
        if eval_word(inst, lhs) != eval_word(inst, rhs):
            fails.append(("jacobson", lhs, rhs))
    for fam, lhs, rhs in inst.families:
        checked += 1
        if eval_word(inst, lhs) != eval_word(inst, rhs):
            fails.append((fam, lhs, rhs))
    even = all(perm_sign(p) == 1 for p in inst.generators)
    return RelationCheck(not fails and even, even, fails, checked)


@dataclass
class BijectionReport:
    passed: bool
    n_forms: int
    n_distinct: int
    all_even: bool
    group_order: int
    matches_group: bool


def alt_bijection_check(inst: AltInstance, forms: list | None = None) -> BijectionReport:
    """Normal forms map injectively onto the group generated by the letter permutations."""
    if forms is None:
        forms = enumerate_alt_normal_forms(inst).words
    images = [eval_word(inst, w) for w in forms]
    distinct = set(images)
    even = all(perm_sign(p) == 1 for p in distinct)
    pg = group_from_permutations(inst.generators[1:], degree=inst.n, with_table=False)
    group = set(pg.perms)
    ok = len(distinct) == len(forms) and even and distinct == group
    return BijectionReport(ok, len(forms), len(distinct), even, len(group), distinct == group)

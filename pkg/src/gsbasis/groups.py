"""Finite groups given by multiplication table or permutation generators.

Elements are integer indices; index 0 is always the identity and the index
order is the absolute order of the group (identity least).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np


class GroupAxiomError(ValueError):
    """A table fails a group axiom; ``axiom`` names it, ``witness`` holds indices."""

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class GroupBudgetExceeded(RuntimeError):
    pass


class FiniteGroup:
    __slots__ = ("names", "table", "inv", "index")

    def __init__(self, names: Sequence[str], table, *, _validated=False):
        self.names = tuple(names)
        self.table = np.asarray(table, dtype=np.int64)
        self.index = {n: i for i, n in enumerate(self.names)}
        if not _validated:
            _validate(self.names, self.table)
        self.inv = _inverses(self.table)

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def elem(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise ValueError(f"element {name!r} not in group") from None

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def subgroup(self, elements) -> "Subgroup":
        idx = [self.elem(e) if isinstance(e, str) else int(e) for e in elements]
        return Subgroup(self, frozenset(idx))

    def generated(self, gens) -> "Subgroup":
        """Subgroup generated by ``gens`` (names or indices)."""
        gens = [self.elem(g) if isinstance(g, str) else int(g) for g in gens]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, frozenset(seen))


def _validate(names, table):
    m = len(names)
    if m == 0:
        raise GroupAxiomError("size", (), "group must have at least one element")
    if table.shape != (m, m):
        raise GroupAxiomError("shape", table.shape, f"table must be {m}x{m}, got {table.shape}")
    if table.min() < 0 or table.max() >= m:
        raise GroupAxiomError("closure", (), "table entries outside element range")
    ids = np.arange(m)
    if not ((table[0] == ids).all() and (table[:, 0] == ids).all()):
        bad = int(np.flatnonzero((table[0] != ids) | (table[:, 0] != ids))[0])
        raise GroupAxiomError(
            "identity", (0, bad), f"element 0 ({names[0]}) is not a two-sided identity (fails at {names[bad]})"
        )
    # (xy)z == x(yz), chunked over x to bound memory
    for x in range(m):
        left = table[table[x]]  # left[y, z] = (x y) z
        right = table[x][table]  # right[y, z] = x (y z)
        diff = left != right
        if diff.any():
            y, z = (int(v) for v in np.argwhere(diff)[0])
            raise GroupAxiomError(
                "associativity",
                (x, y, z),
                f"associativity fails for ({names[x]}, {names[y]}, {names[z]})",
            )
    for x in range(m):
        if not (table[x] == 0).any() or not (table[:, x] == 0).any():
            raise GroupAxiomError("inverse", (x,), f"element {names[x]} has no inverse")


def _inverses(table) -> tuple:
    m = table.shape[0]
    return tuple(int(np.flatnonzero(table[x] == 0)[0]) for x in range(m))


def group_from_table(names: Sequence[str], table) -> FiniteGroup:
    """Validated group from an element list (identity first) and its table.

    ``table`` may hold names or indices.
    """
    names = list(names)
    index = {n: i for i, n in enumerate(names)}
    rows = []
    for r in table:
        row = []
        for v in r:
            if isinstance(v, str):
                if v not in index:
                    raise ValueError(f"unknown element {v!r} in table")
                row.append(index[v])
            else:
                row.append(int(v))
        rows.append(row)
    if any(len(r) != len(names) for r in rows) or len(rows) != len(names):
        raise GroupAxiomError("shape", (), f"table must be {len(names)}x{len(names)}")
    return FiniteGroup(names, rows)


# permutations: tuples p with p[x] the image of x, points 0..n-1.
# Products read left to right: compose(p, q) applies p first, then q.


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    return tuple(q[x] for x in p)


def perm_inverse(p: Sequence[int]) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def parse_cycles(text: str, n: int | None = None) -> tuple:
    """Parse 1-based cycle notation such as ``(1 2)(3 4)`` or ``(1,2,3)``.

    Cycles are composed left to right.  ``()`` or ``e`` is the identity.
    """
    text = text.strip()
    cycles = []
    if text not in ("", "e", "()", "id"):
        body = text.replace(" ", ",")
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad cycle notation {text!r}")
        for chunk in body[1:-1].split(")("):
            pts = [int(x) for x in chunk.split(",") if x]
            if len(set(pts)) != len(pts) or any(x < 1 for x in pts):
                raise ValueError(f"bad cycle {chunk!r}")
            cycles.append(pts)
    top = max((max(c) for c in cycles if c), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"cycle point {top} exceeds degree {n}")
    result = tuple(range(n))
    for c in cycles:
        p = list(range(n))
        for a, b in zip(c, c[1:] + c[:1]):
            p[a - 1] = b - 1
        result = compose(result, p)
    return result


def format_cycles(p: Sequence[int]) -> str:
    """1-based cycle notation without spaces, e.g. ``(1,2)(3,4)``; identity is ``e``."""
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "e"


@dataclass(frozen=True)
class PermGroup:
    """A permutation group's elements alongside its :class:`FiniteGroup` table."""

    group: FiniteGroup | None  # None when built without a table
    perms: tuple
    degree: int
    index: dict = field(repr=False, compare=False)


def group_from_permutations(
    generators, degree: int | None = None, max_size: int = 50000, with_table: bool = True
) -> PermGroup:
    """Closure of ``generators`` (tuples or cycle strings) under composition.

    Elements are sorted by image tuple, which puts the identity first.
    """
    gens = []
    for g in generators:
        gens.append(parse_cycles(g, degree) if isinstance(g, str) else tuple(g))
    if degree is None:
        degree = max((len(g) for g in gens), default=0)
    gens = [tuple(g) + tuple(range(len(g), degree)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation: {g}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_size:
                        raise GroupBudgetExceeded(f"closure exceeds {max_size} elements")
        frontier = nxt
    perms = tuple(sorted(seen))
    index = {p: i for i, p in enumerate(perms)}
    if not with_table:
        return PermGroup(None, perms, degree, index)
    m = len(perms)
    arr = np.array(perms, dtype=np.int64).reshape(m, degree)
    # encode each permutation as an integer to look products up vectorised
    radix = np.int64(max(degree, 1)) ** np.arange(degree, dtype=np.int64)
    codes = arr @ radix
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        # row i: compose(perm_i, perm_j) = perm_j[perm_i[x]]
        prods = arr[:, arr[i]]
        pos = np.searchsorted(sorted_codes, prods @ radix)
        table[i] = order[pos]
    names = [format_cycles(p) for p in perms]
    group = FiniteGroup(names, table, _validated=True)
    return PermGroup(group, perms, degree, index)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: frozenset

    def __post_init__(self):
        g = self.parent
        if 0 not in self.elements:
            raise ValueError("subgroup must contain the identity")
        for x in self.elements:
            if not 0 <= x < g.order:
                raise ValueError(f"element {x} not in group")
            if g.inv[x] not in self.elements:
                raise ValueError(f"subgroup not closed under inverse at {g.names[x]}")
            for y in self.elements:
                if g.mul(x, y) not in self.elements:
                    raise ValueError(f"subgroup not closed under product at ({g.names[x]}, {g.names[y]})")

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> list[int]:
        return sorted(self.elements)


@dataclass(frozen=True)
class CosetData:
    """Left cosets ``gH`` with absolute-minimal representatives.

    ``decompose[g] = (rep, h)`` with ``g = rep * h`` and ``h`` in the subgroup.
    """

    subgroup: Subgroup
    representatives: tuple
    decompose: tuple

    @property
    def group(self) -> FiniteGroup:
        return self.subgroup.parent

    def rep(self, g: int) -> int:
        return self.decompose[g][0]

    def remainder(self, g: int) -> int:
        return self.decompose[g][1]

    def rep_index(self, g: int) -> int:
        return self.representatives.index(self.decompose[g][0])

    def is_rep(self, g: int) -> bool:
        return self.decompose[g][0] == g


def left_cosets(G: FiniteGroup, H: Subgroup) -> CosetData:
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    inv = G.inv
    decomp = [None] * G.order
    reps = []
    for g in range(G.order):
        if decomp[g] is not None:
            continue
        # g is the least unassigned element, hence minimal in gH
        reps.append(g)
        for h in H.elements:
            decomp[G.mul(g, h)] = (g, h)
    for g in range(G.order):
        r, h = decomp[g]
        assert G.mul(r, h) == g and G.mul(inv[r], g) == h
    return CosetData(H, tuple(reps), tuple(decomp))


@dataclass(frozen=True)
class Isomorphism:
    domain: Subgroup
    codomain: Subgroup
    mapping: Mapping[int, int]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def inverse(self) -> "Isomorphism":
        return Isomorphism(self.codomain, self.domain, {v: k for k, v in self.mapping.items()})


@dataclass
class IsoReport:
    passed: bool
    failure: str | None = None
    witness: tuple = ()


def verify_isomorphism(phi: Isomorphism) -> IsoReport:
    A, B = phi.domain, phi.codomain
    G = A.parent
    m = phi.mapping
    missing = [a for a in A.sorted() if a not in m]
    if missing:
        return IsoReport(False, "undefined", (missing[0],))
    outside = [a for a in A.sorted() if m[a] not in B.elements]
    if outside:
        return IsoReport(False, "codomain", (outside[0], m[outside[0]]))
    if len(set(m[a] for a in A.elements)) != len(B):
        return IsoReport(False, "bijectivity", ())
    if m[0] != 0:
        return IsoReport(False, "identity", (0, m[0]))
    for x in A.sorted():
        for y in A.sorted():
            if m[G.mul(x, y)] != B.parent.mul(m[x], m[y]):
                return IsoReport(False, "homomorphism", (x, y))
    return IsoReport(True)


def cyclic_group(m: int, names: Sequence[str] | None = None) -> FiniteGroup:
    if names is None:
        names = ["e"] + [f"c{i}" if i > 1 else "c" for i in range(1, m)]
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    return group_from_table(names, table)

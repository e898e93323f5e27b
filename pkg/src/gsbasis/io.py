"""Presentation (``.gsp``) and group (``.grp``) text formats.

Presentation file::

    # comment
    alphabet: a b A inv(a,A)
    order: deglex                 # or: hnn path/to/group.grp
    relations:
    a a = 1
    2 a b - 1/2 b a + 1 = 0

Letters are listed least to greatest.  Each relation is ``lhs = rhs`` where
both sides are sums of terms ``[coefficient] letter letter ...``; ``1`` is
the empty word and ``0`` the zero polynomial.

Group file::

    elements: e a a2 a3           # identity first; listing = absolute order
    table:
    e a a2 a3
    a a2 a3 e
    ...
    subgroupA: e a2
    subgroupB: e a2
    phi: e->e a2->a2

``permgens:`` (one cycle-notation generator per line, or ``;``-separated)
may replace ``elements:`` and ``table:``; elements are then named in cycle
notation such as ``(1,2,3)``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .freealg import Alphabet, Poly
from .groups import FiniteGroup, Subgroup, group_from_permutations, group_from_table
from .hnn import HnnInstance, build_hnn
from .orders import DegLex, HnnOrder
from .rewrite import Presentation

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")
_HEADER = re.compile(r"^([A-Za-z_]+)\s*:(.*)$")
_INV = re.compile(r"^inv\(([^,()\s]+),([^,()\s]+)\)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def fixtures_dir() -> Path:
    return Path(str(resources.files("gsbasis") / "fixtures"))


def _sections(text: str, known: set[str], path=None) -> dict[str, list[tuple[int, str]]]:
    """Split into ``{header: [(line number, content), ...]}``; header-line content first."""
    out: dict[str, list[tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m and m.group(1) in known:
            current = m.group(1)
            if current in out:
                raise ParseError(f"duplicate section {current!r}", lineno, path)
            out[current] = []
            rest = m.group(2).strip()
            if rest:
                out[current].append((lineno, rest))
            continue
        if current is None:
            raise ParseError(f"content outside a section: {line!r}", lineno, path)
        out[current].append((lineno, line))
    return out


# polynomials


def parse_poly(text: str, alphabet: Alphabet) -> Poly:
    """Parse a sum of terms such as ``2 a b - 1/2 b a + 1``."""
    tokens = text.split()
    if tokens == ["0"]:
        return Poly.zero(alphabet)
    if not tokens:
        raise ValueError("empty polynomial")
    terms: dict = {}
    sign = 1
    cur: list[str] = []

    def flush():
        if not cur:
            raise ValueError(f"dangling operator in {text!r}")
        coeff = Fraction(1)
        letters = cur
        if _NUMBER.match(cur[0]) and cur[0] not in alphabet.index:
            coeff = Fraction(cur[0])
            letters = cur[1:]
        word = tuple(alphabet.letter(tok) for tok in letters if tok != "1")
        terms[word] = terms.get(word, 0) + sign * coeff

    for tok in tokens:
        if tok in ("+", "-"):
            if cur:
                flush()
            elif tok == "-" and not terms:
                sign = -sign
                continue
            cur = []
            sign = -1 if tok == "-" else 1
            continue
        cur.append(tok)
    flush()
    return Poly(alphabet, terms)


def parse_relation(line: str, alphabet: Alphabet) -> Poly:
    if line.count("=") != 1:
        raise ValueError("relation needs exactly one '='")
    lhs, rhs = line.split("=")
    return parse_poly(lhs, alphabet) - parse_poly(rhs, alphabet)


# presentations


def parse_presentation(text: str, base_dir: str | os.PathLike | None = None, path=None) -> Presentation:
    secs = _sections(text, {"alphabet", "order", "relations"}, path)
    if "alphabet" not in secs:
        raise ParseError("missing 'alphabet:' section", None, path)
    names, inverses = [], []
    for lineno, line in secs["alphabet"]:
        for tok in line.split():
            m = _INV.match(tok)
            if m:
                inverses.append((lineno, m.group(1), m.group(2)))
            elif tok.startswith("inv("):
                raise ParseError(f"bad inverse annotation {tok!r}", lineno, path)
            else:
                names.append((lineno, tok))
    try:
        alphabet = Alphabet([n for _, n in names], [(a, b) for _, a, b in inverses])
    except ValueError as exc:
        line = names[0][0] if names else None
        raise ParseError(str(exc), line, path) from None
    order_lines = secs.get("order", [])
    order_spec = order_lines[0][1].split() if order_lines else ["deglex"]
    if len(order_lines) > 1:
        raise ParseError("order takes a single line", order_lines[1][0], path)
    lineno = order_lines[0][0] if order_lines else None
    hnn_source = None
    if order_spec == ["deglex"]:
        order = DegLex(len(alphabet))
    elif order_spec[0] == "hnn" and len(order_spec) == 2:
        grp = Path(order_spec[1])
        if not grp.is_absolute() and base_dir is not None:
            grp = Path(base_dir) / grp
        inst = load_hnn(grp)
        if inst.alphabet.names != alphabet.names:
            raise ParseError("alphabet does not match the HNN instance (G\\{1} then t t-)", lineno, path)
        order = inst.order
        hnn_source = order_spec[1]
    else:
        raise ParseError(f"unknown order {' '.join(order_spec)!r}", lineno, path)
    polys = []
    for lineno, line in secs.get("relations", []):
        try:
            polys.append(parse_relation(line, alphabet))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, path) from None
    pres = Presentation(alphabet, polys, order)
    pres.hnn_source = hnn_source
    return pres


def load_presentation(path: str | os.PathLike) -> Presentation:
    path = Path(path)
    return parse_presentation(path.read_text(), base_dir=path.parent, path=path)


def emit_presentation(p: Presentation, hnn_source: str | None = None) -> str:
    a = p.alphabet
    alpha = list(a.names) + [f"inv({x},{y})" for x, y in a.inverse_pairs()]
    lines = ["alphabet: " + " ".join(alpha)]
    if isinstance(p.order, HnnOrder):
        src = hnn_source or p.hnn_source
        if src is None:
            raise ValueError("HNN order needs the group file path")
        lines.append(f"order: hnn {src}")
    elif isinstance(p.order, DegLex) and p.order.rank is None:
        lines.append("order: deglex")
    else:
        raise ValueError(f"order {p.order!r} has no file representation")
    lines.append("relations:")
    key = p.order.key
    for r in sorted(p.rules, key=lambda r: key(r.lead)):
        lines.append(p.format_rule(r))
    return "\n".join(lines) + "\n"


# groups


@dataclass
class GroupSpec:
    group: FiniteGroup
    A: Subgroup | None = None
    B: Subgroup | None = None
    phi: dict | None = None
    perms: tuple | None = None


def parse_group(text: str, path=None) -> GroupSpec:
    secs = _sections(text, {"elements", "table", "subgroupA", "subgroupB", "phi", "permgens", "degree"}, path)
    try:
        if "permgens" in secs:
            if "table" in secs or "elements" in secs:
                raise ParseError("use either permgens or elements/table", secs["permgens"][0][0], path)
            gens = []
            for _, line in secs["permgens"]:
                gens.extend(g.strip() for g in line.split(";") if g.strip())
            degree = int(secs["degree"][0][1]) if "degree" in secs else None
            pg = group_from_permutations(gens, degree=degree)
            group, perms = pg.group, pg.perms
        else:
            if "elements" not in secs or "table" not in secs:
                raise ParseError("need 'elements:' and 'table:' (or 'permgens:')", None, path)
            names = [tok for _, line in secs["elements"] for tok in line.split()]
            rows = [line.split() for _, line in secs["table"]]
            group = group_from_table(names, rows)
            perms = None
        spec = GroupSpec(group, perms=perms)
        for key in ("subgroupA", "subgroupB"):
            if key in secs:
                elems = [tok for _, line in secs[key] for tok in line.split()]
                setattr(spec, key[-1], group.subgroup(elems))
        if "phi" in secs:
            phi = {}
            for lineno, line in secs["phi"]:
                for tok in line.split():
                    if "->" not in tok:
                        raise ParseError(f"bad phi pair {tok!r}", lineno, path)
                    x, y = tok.split("->")
                    phi[group.elem(x)] = group.elem(y)
            spec.phi = phi
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), None, path) from exc
    return spec


def load_group(path: str | os.PathLike) -> GroupSpec:
    path = Path(path)
    return parse_group(path.read_text(), path=path)


def hnn_from_spec(spec: GroupSpec) -> HnnInstance:
    if spec.A is None:
        raise ValueError("group file has no subgroupA")
    B = spec.B if spec.B is not None else spec.A
    phi = spec.phi
    if phi is None:
        if B != spec.A:
            raise ValueError("phi is required when subgroupB differs from subgroupA")
        phi = {a: a for a in spec.A.elements}
    return build_hnn(spec.group, spec.A, B, phi)


def load_hnn(path: str | os.PathLike) -> HnnInstance:
    try:
        return hnn_from_spec(load_group(path))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), None, path) from exc

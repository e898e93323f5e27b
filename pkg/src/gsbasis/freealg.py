"""Exact arithmetic in the free associative algebra over the rationals.

Words are plain tuples of letter indices into an :class:`Alphabet`; the empty
tuple is the identity word ``1``.  Polynomials map words to nonzero
:class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple  # tuple[int, ...]

ONE: Word = ()


class AlphabetMismatch(ValueError):
    pass


class Alphabet:
    """Ranked list of generator names, with optional inverse-pair links.

    The listing order is the letter ranking used by deg-lex.
    """

    __slots__ = ("names", "index", "inverse")

    def __init__(self, names: Sequence[str], inverses: Iterable[tuple[str, str]] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letter names in {names}")
        for name in names:
            if not name or any(ch.isspace() for ch in name) or name in ("1", "0", "+", "-", "="):
                raise ValueError(f"invalid letter name {name!r}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}
        inverse: dict[int, int] = {}
        for a, b in inverses:
            ia, ib = self.letter(a), self.letter(b)
            if inverse.get(ia, ib) != ib or inverse.get(ib, ia) != ia:
                raise ValueError(f"conflicting inverse annotation for {a}, {b}")
            inverse[ia] = ib
            inverse[ib] = ia
        self.inverse = inverse

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.names == other.names and self.inverse == other.inverse

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)})"

    def letter(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise ValueError(f"unknown letter {name!r}") from None

    def inverse_pairs(self) -> list[tuple[str, str]]:
        return [(self.names[a], self.names[b]) for a, b in sorted(self.inverse.items()) if a < b]

    def parse_word(self, text: str) -> Word:
        """Parse space-separated letter names; ``1`` or blank is the empty word."""
        tokens = text.split()
        if tokens == ["1"] or not tokens:
            return ONE
        return tuple(self.letter(tok) for tok in tokens)

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        return " ".join(self.names[x] for x in w)

    def check_word(self, w: Word) -> Word:
        n = len(self.names)
        for x in w:
            if not (isinstance(x, int) and 0 <= x < n):
                raise ValueError(f"letter {x!r} outside alphabet of size {n}")
        return w


def _coeff(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("float coefficients are not exact; use Fraction or int")
    return Fraction(c)


class Poly:
    """Element of k<X> with rational coefficients.  Immutable."""

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, object] | None = None):
        self.alphabet = alphabet
        clean: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = _coeff(c)
                if c:
                    clean[tuple(w)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alphabet, terms):
        # terms already cleaned, owned by the new object
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, alphabet: Alphabet, w: Word, coeff=1) -> "Poly":
        return cls(alphabet, {tuple(w): coeff})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "Poly":
        return cls._raw(alphabet, {})

    @classmethod
    def binomial(cls, alphabet: Alphabet, u: Word, v: Word) -> "Poly":
        """The semigroup relation ``u - v``."""
        return cls(alphabet, {u: 1}) - cls(alphabet, {v: 1})

    # mapping-like access

    def __getitem__(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.alphabet == other.alphabet and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self.format()})"

    # arithmetic

    def _check(self, other: "Poly"):
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("operands are over different alphabets")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return Poly._raw(self.alphabet, terms)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) - c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return Poly._raw(self.alphabet, terms)

    def scale(self, c) -> "Poly":
        c = _coeff(c)
        if not c:
            return Poly.zero(self.alphabet)
        return Poly._raw(self.alphabet, {w: c * d for w, d in self._terms.items()})

    def lmul(self, w: Word) -> "Poly":
        """``w * self``."""
        w = tuple(w)
        return Poly._raw(self.alphabet, {w + u: c for u, c in self._terms.items()})

    def rmul(self, w: Word) -> "Poly":
        """``self * w``."""
        w = tuple(w)
        return Poly._raw(self.alphabet, {u + w: c for u, c in self._terms.items()})

    def sandwich(self, a: Word, b: Word) -> "Poly":
        """``a * self * b``."""
        return Poly._raw(self.alphabet, {a + u + b: c for u, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            terms: dict[Word, Fraction] = {}
            for u, c in self._terms.items():
                for v, d in other._terms.items():
                    w = u + v
                    s = terms.get(w, 0) + c * d
                    if s:
                        terms[w] = s
                    else:
                        terms.pop(w, None)
            return Poly._raw(self.alphabet, terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # order-dependent

    def leading(self, order) -> tuple[Word, Fraction]:
        """Order-maximal word of the support and its coefficient."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        w = max(self._terms, key=order.key)
        return w, self._terms[w]

    def leading_word(self, order) -> Word:
        return self.leading(order)[0]

    def monic(self, order) -> "Poly":
        _, c = self.leading(order)
        if c == 1:
            return self
        return self.scale(1 / c)

    def sorted_terms(self, order=None) -> list[tuple[Word, Fraction]]:
        """Terms in descending order (deg-lex by letter index when no order is given)."""
        key = order.key if order is not None else (lambda w: (len(w), w))
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def format(self, order=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.sorted_terms(order)):
            word = self.alphabet.format_word(w)
            mag = abs(c)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = word
            else:
                body = f"{mag} {word}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def poly_arith(f: Poly, g: Poly | None, op: str, arg=None) -> Poly:
    """Dispatch helper: ``add``, ``sub``, ``scale``, ``left-mul``, ``right-mul``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "scale":
        return f.scale(arg)
    if op in ("left-mul", "lmul"):
        return f.lmul(arg)
    if op in ("right-mul", "rmul"):
        return f.rmul(arg)
    raise ValueError(f"unknown operation {op!r}")


def leading_word(f: Poly, order) -> tuple[Word, Fraction]:
    return f.leading(order)


def make_monic(f: Poly, order) -> Poly:
    return f.monic(order)


def occurrences(word: Word, sub: Word) -> Iterator[int]:
    """Start positions of ``sub`` inside ``word``."""
    n, m = len(word), len(sub)
    for i in range(n - m + 1):
        if word[i:i + m] == sub:
            yield i


def all_words(n_letters: int, maxlen: int, minlen: int = 0) -> Iterator[Word]:
    """Every word of length ``minlen..maxlen``, by length then letter index."""
    from itertools import product

    for length in range(minlen, maxlen + 1):
        yield from product(range(n_letters), repeat=length)

"""
Free-group word engine:
- Explicit generator alphabets (a word only mixes with words of its own alphabet)
- Immutable, freely reduced words with arbitrary-precision exponents
- Concatenation, inversion, conjugation, cyclic reduction
- Text notation "c1 c2^-1 (c1 c2 c3)^4" and the JSON [[name, exponent]] form
"""

from __future__ import annotations

import re
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from errors import AlphabetMismatchError, InvalidParameterError, ParseError

logger = logging.getLogger(__name__)

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<pow>\^\s*-?\d+)|(?P<open>\()|(?P<close>\))|(?P<one>1)|(?P<sep>[*.]))")


@dataclass(frozen=True, order=True)
class GeneratorSymbol:
    """A generator name; symbols compare by name only."""

    name: str

    def __str__(self) -> str:
        return self.name


class Alphabet:
    """An ordered, duplicate-free set of generator symbols."""

    def __init__(self, names: Iterable[str], label: str | None = None):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise InvalidParameterError(f"Invalid generator name: {name!r}")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise InvalidParameterError(f"Duplicate generator names: {dupes}")

        self._symbols = tuple(GeneratorSymbol(n) for n in names)
        self._index = {n: i for i, n in enumerate(names)}
        self.label = label

    def __repr__(self) -> str:
        return self.label or f"Alphabet({list(self.names)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self._symbols)

    def __contains__(self, item) -> bool:
        name = item.name if isinstance(item, GeneratorSymbol) else item
        return name in self._index

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self._symbols)

    @property
    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        return self._symbols

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetMismatchError(f"Generator {name!r} not in {self!r}") from None

    def symbol(self, name: str) -> GeneratorSymbol:
        return self._symbols[self.index(name)]

    def without(self, names: Iterable[str], label: str | None = None) -> "Alphabet":
        """Alphabet with the given generators removed (order kept)."""
        drop = set(names)
        return Alphabet((n for n in self.names if n not in drop), label=label)

    # ── Word constructors ──

    def identity(self) -> "Word":
        return Word(self, ())

    def gen(self, name: str, exponent: int = 1) -> "Word":
        return Word(self, ((name, exponent),))

    def word(self, *items: Union[str, tuple[str, int]]) -> "Word":
        """Build a word from names and (name, exponent) pairs."""
        letters = []
        for item in items:
            if isinstance(item, str):
                letters.append((item, 1))
            else:
                letters.append(tuple(item))
        return Word(self, letters)

    def parse(self, text: str, macros: Mapping[str, "Word"] | None = None) -> "Word":
        """
        Parse text notation into a reduced word.

        Grammar: a sequence of atoms, each optionally raised to an integer
        power; an atom is a generator name, a macro name or a parenthesized
        sequence. "*" and "." separators are ignored, "1" is the identity.

        Args:
            text: e.g. "(c1 c2 c3)^4 (c0 b0)^-1 mu^-1"
            macros: names that expand to words over this alphabet

        Returns:
            The freely reduced word.
        """
        return _Parser(self, text, macros or {}).parse()


class Word:
    """
    Immutable, freely reduced word over an alphabet.

    Letters are (GeneratorSymbol, exponent) syllables; adjacent syllables
    never share a symbol and exponents are never zero.
    """

    __slots__ = ("_alphabet", "_letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[tuple]):
        stack: list[list] = []
        for raw, exponent in letters:
            name = raw.name if isinstance(raw, GeneratorSymbol) else raw
            if name not in alphabet:
                raise AlphabetMismatchError(f"Generator {name!r} not in {alphabet!r}")
            if isinstance(exponent, bool) or not isinstance(exponent, int):
                raise InvalidParameterError(f"Exponent must be an integer, got {exponent!r}")
            if exponent == 0:
                continue
            if stack and stack[-1][0] == name:
                stack[-1][1] += exponent
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([name, exponent])

        self._alphabet = alphabet
        self._letters = tuple((alphabet.symbol(n), e) for n, e in stack)

    # ── Basic protocol ──

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def letters(self) -> tuple[tuple[GeneratorSymbol, int], ...]:
        return self._letters

    @property
    def syllables(self) -> int:
        return len(self._letters)

    @property
    def length(self) -> int:
        """Number of letters counted with multiplicity."""
        return sum(abs(e) for _, e in self._letters)

    def __len__(self) -> int:
        return self.length

    def is_identity(self) -> bool:
        return not self._letters

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._alphabet == other._alphabet and self._letters == other._letters

    def __hash__(self) -> int:
        return hash((self._alphabet, self._letters))

    def __str__(self) -> str:
        if not self._letters:
            return "1"
        return " ".join(s.name if e == 1 else f"{s.name}^{e}" for s, e in self._letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    # ── Group operations ──

    def _check_same(self, other: "Word"):
        if not isinstance(other, Word):
            raise TypeError(f"Expected a Word, got {type(other).__name__}")
        if self._alphabet != other._alphabet:
            raise AlphabetMismatchError(
                f"Cannot combine words over different alphabets: {self._alphabet!r}, {other._alphabet!r}"
            )

    def __mul__(self, other: "Word") -> "Word":
        self._check_same(other)
        return Word(self._alphabet, self._letters + other._letters)

    def __invert__(self) -> "Word":
        return Word(self._alphabet, tuple((s, -e) for s, e in reversed(self._letters)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return self._alphabet.identity()
        if n < 0:
            return (~self) ** -n
        half = self ** (n // 2)
        return half * half * self if n % 2 else half * half

    def conjugate(self, w: "Word") -> "Word":
        """Return w^-1 self w."""
        self._check_same(w)
        return ~w * self * w

    def cyclic_reduce(self) -> "Word":
        """Cancel first-against-last letters until the word is cyclically reduced."""
        letters = [list(x) for x in self._letters]
        while len(letters) >= 2 and letters[0][0] == letters[-1][0]:
            first = letters.pop(0)
            last = letters.pop()
            merged = first[1] + last[1]
            if merged:
                letters.insert(0, [first[0], merged])
        return Word(self._alphabet, letters)

    # ── Inspection ──

    def exponent_sum(self, name: str) -> int:
        return sum(e for s, e in self._letters if s.name == name)

    def support(self) -> set[str]:
        """Names of the generators that occur in the word."""
        return {s.name for s, _ in self._letters}

    def canonical_cyclic_form(self) -> tuple[tuple[int, int], ...]:
        """
        Invariant of the cyclic word up to rotation and inversion.

        Computed as the lexicographically least syllable rotation of the
        cyclic reduction or of its inverse, in alphabet-index coordinates.
        """
        reduced = self.cyclic_reduce()
        candidates = []
        for w in (reduced, ~reduced):
            coords = [(self._alphabet.index(s.name), e) for s, e in w.letters]
            for k in range(max(1, len(coords))):
                candidates.append(tuple(coords[k:] + coords[:k]))
        return min(candidates)

    def substitute(self, mapping: Mapping[str, "Word | None"], target: Alphabet | None = None) -> "Word":
        """
        Replace generators by words over ``target``.

        Generators missing from ``mapping`` map to the same-named generator
        of ``target``; a ``None`` image means the identity.
        """
        target = target or self._alphabet
        out = target.identity()
        for s, e in self._letters:
            if s.name in mapping:
                image = mapping[s.name]
                image = target.identity() if image is None else image
            else:
                image = target.gen(s.name)
            out = out * image ** e
        return out

    # ── Serialization ──

    def to_json(self) -> list[list]:
        return [[s.name, e] for s, e in self._letters]

    @classmethod
    def from_json(cls, alphabet: Alphabet, data) -> "Word":
        if not isinstance(data, list):
            raise ParseError(f"Word JSON must be a list of [name, exponent] pairs, got {type(data).__name__}")
        letters = []
        for item in data:
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)
                    and isinstance(item[1], int) and not isinstance(item[1], bool)):
                raise ParseError(f"Malformed letter in word JSON: {item!r}")
            letters.append((item[0], item[1]))
        return cls(alphabet, letters)


# ─── Free functions ──────────────────────────────────────────────────

def concat(u: Word, v: Word) -> Word:
    """Freely reduced product u·v."""
    return u * v


def invert(u: Word) -> Word:
    return ~u


def conjugate(u: Word, w: Word) -> Word:
    """w^-1 u w, freely reduced."""
    return u.conjugate(w)


def cyclic_reduce(u: Word) -> Word:
    return u.cyclic_reduce()


# ─── Parser ──────────────────────────────────────────────────────────

class _Parser:
    def __init__(self, alphabet: Alphabet, text: str, macros: Mapping[str, Word]):
        self.alphabet = alphabet
        self.text = text
        self.macros = macros
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[tuple[str, str]]:
        tokens = []
        i = 0
        stripped = text.rstrip()
        while i < len(stripped):
            m = _TOKEN_RE.match(stripped, i)
            if not m or m.end() == i:
                raise ParseError(f"Unexpected character at position {i} in {text!r}")
            kind = m.lastgroup
            if kind != "sep":
                tokens.append((kind, m.group(kind)))
            i = m.end()
        return tokens

    def parse(self) -> Word:
        word = self._sequence()
        if self.pos != len(self.tokens):
            raise ParseError(f"Unbalanced parenthesis in {self.text!r}")
        return word

    def _sequence(self) -> Word:
        out = self.alphabet.identity()
        while self.pos < len(self.tokens) and self.tokens[self.pos][0] != "close":
            out = out * self._term()
        return out

    def _term(self) -> Word:
        kind, value = self.tokens[self.pos]
        self.pos += 1
        if kind == "name":
            if value in self.macros:
                atom = self.macros[value]
            elif value in self.alphabet:
                atom = self.alphabet.gen(value)
            else:
                raise ParseError(f"Unknown generator {value!r} in {self.text!r}")
        elif kind == "one":
            atom = self.alphabet.identity()
        elif kind == "open":
            atom = self._sequence()
            if self.pos >= len(self.tokens) or self.tokens[self.pos][0] != "close":
                raise ParseError(f"Missing ')' in {self.text!r}")
            self.pos += 1
        else:
            raise ParseError(f"Unexpected {value!r} in {self.text!r}")

        if self.pos < len(self.tokens) and self.tokens[self.pos][0] == "pow":
            power = int(self.tokens[self.pos][1].lstrip("^").strip())
            self.pos += 1
            atom = atom ** power
        return atom

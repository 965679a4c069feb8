"""Alphabets, words, theta-joins and the shortlex number/word bijection.

The working alphabet has sixteen base symbols (indices 0..15) plus the
separator theta (index 16).  A seventeenth blank symbol (index 17) exists
only inside machine tapes and never occurs in a Word.

Glyph table (fixed here, referenced by role everywhere else):

    index  glyph  role
    0      0      digit zero
    1      1      digit one
    2      L      statement tag: loops-on-self
    3      F      statement tag: faultless
    4      A      statement tag: all-halts
    5      N      statement tag: negation
    6      P      proof-token tag
    7      (      open bracket
    8      )      close bracket
    9..15  []{}<>*   scratch marks reserved for compiled machines
    16     #      theta (field separator)
    17     _      blank (machine-internal, not part of any word)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

ALPHABET_SIZE = 16
THETA = 16
BLANK = 17
TAPE_SYMBOLS = 18

GLYPHS = "01LFANP()[]{}<>*#"
BLANK_GLYPH = "_"

# Symbols by role.
D0, D1 = 0, 1
TAG_LOOPS, TAG_FAULTLESS, TAG_ALLHALTS, TAG_NOT, TAG_PROOF = 2, 3, 4, 5, 6
OPEN, CLOSE = 7, 8
MARK0, MARK1, WALL, CONSUMED, CURSOR0, CURSOR1, STAR = 9, 10, 11, 12, 13, 14, 15

_GLYPH_TO_SYMBOL = {g: i for i, g in enumerate(GLYPHS)}


class FieldCountError(ValueError):
    """A word does not contain enough theta separators to split."""


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over the seventeen-symbol alphabet.

    A-words contain no theta; every A-word is also a valid B-word.  The
    blank symbol is never allowed inside a word.
    """

    syms: tuple[int, ...]

    def __post_init__(self) -> None:
        for s in self.syms:
            if not 0 <= s <= THETA:
                raise ValueError(f"symbol index {s} out of range for a word")

    @property
    def is_a_word(self) -> bool:
        return THETA not in self.syms

    def __len__(self) -> int:
        return len(self.syms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.syms)

    def __getitem__(self, i):
        return self.syms[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.syms + other.syms)

    def __repr__(self) -> str:
        return f"Word({word_to_text(self)!r})"


EPSILON = Word(())


def word(syms: Iterable[int]) -> Word:
    return Word(tuple(syms))


def word_from_text(text: str) -> Word:
    """Parse a textual word literal; theta is written '#', empty word ''."""
    try:
        return Word(tuple(_GLYPH_TO_SYMBOL[c] for c in text))
    except KeyError as e:
        raise ValueError(f"unknown symbol glyph {e.args[0]!r}") from None


def word_to_text(w: Word) -> str:
    return "".join(GLYPHS[s] for s in w)


def theta_join(v: Word, u: Word) -> Word:
    """Join two words with a single theta between them."""
    return Word(v.syms + (THETA,) + u.syms)


def split_fields(w: Word, n: int) -> list[Word]:
    """Split at the first n-1 thetas; the last field keeps any further thetas.

    Raises FieldCountError when w has fewer than n-1 theta occurrences.
    """
    if n < 1:
        raise ValueError("field count must be at least 1")
    fields: list[Word] = []
    rest = list(w.syms)
    for _ in range(n - 1):
        if THETA not in rest:
            raise FieldCountError(
                f"expected {n} theta-separated fields, ran out of separators"
            )
        i = rest.index(THETA)
        fields.append(Word(tuple(rest[:i])))
        rest = rest[i + 1 :]
    fields.append(Word(tuple(rest)))
    return fields


def _words_shorter_than(length: int) -> int:
    # Number of words with length < `length` over a 17-symbol alphabet.
    return (17**length - 1) // 16


def word_at(n: int) -> Word:
    """The n-th word in shortlex order (length first, then symbol index)."""
    if n < 0:
        raise ValueError("word index must be non-negative")
    if n == 0:
        return EPSILON
    length = 1
    while _words_shorter_than(length + 1) <= n:
        length += 1
    offset = n - _words_shorter_than(length)
    syms = []
    for _ in range(length):
        offset, digit = divmod(offset, 17)
        syms.append(digit)
    syms.reverse()
    return Word(tuple(syms))


def shortlex_index(w: Word) -> int:
    """Inverse of word_at."""
    value = 0
    for s in w:
        value = value * 17 + s
    return _words_shorter_than(len(w)) + value

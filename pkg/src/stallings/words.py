"""Reduced words in a finitely generated free group.

A word is a sequence of signed generator indices: +i is the i-th generator,
-i its inverse (indices start at 1).  Words are kept freely reduced at all
times, so equality of Word objects is equality in the group.

Text form: generators print as x, y, z for ranks up to 3 and as x1..xk
above that; an uppercase letter is the inverse of the lowercase one.
Juxtaposition is multiplication, so "xyXY" is the commutator of x and y.
The identity prints as "e".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class MalformedWordError(ValueError):
    """Raised for unparsable word text or out-of-range generator indices."""


class AlphabetMismatchError(ValueError):
    """Raised when combining words over different alphabets."""


_LETTER_BASE = {"x": 1, "y": 2, "z": 3}
_TOKEN_RE = re.compile(r"([xyzXYZ])(\d*)")


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence.  Idempotent.

    >>> free_reduce((1, 2, -2, -1, 1))
    (1,)
    """
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def gen_name(index: int, rank: int, sign: int = 1) -> str:
    """Printable name of generator ``index`` (1-based) in a rank-k alphabet."""
    if rank <= 3:
        name = "xyz"[index - 1]
    else:
        name = "x%d" % index
    return name.upper() if sign < 0 else name


def _parse_letters(text: str, rank: int) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    pos = 0
    letters: list[int] = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise MalformedWordError("unexpected character %r in %r" % (text[pos], text))
        ch, digits = m.group(1), m.group(2)
        sign = -1 if ch.isupper() else 1
        base = _LETTER_BASE[ch.lower()]
        if digits:
            if ch.lower() != "x":
                raise MalformedWordError("indexed generators must use x, got %r" % m.group(0))
            index = int(digits)
        else:
            index = base
        if not 1 <= index <= rank:
            raise MalformedWordError(
                "generator %r out of range for rank %d" % (m.group(0), rank))
        letters.append(sign * index)
        pos = m.end()
    return tuple(letters)


@dataclass(frozen=True)
class Alphabet:
    """A free generating set of size ``rank``.  Rank 0 is the trivial group."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def word(self, text: str) -> "Word":
        """Parse word text over this alphabet.

        >>> Alphabet(2).word("xyXY").letters
        (1, 2, -1, -2)
        """
        return Word(self, _parse_letters(text, self.rank))

    def gen(self, index: int) -> "Word":
        return Word(self, (index,))

    def gens(self) -> list["Word"]:
        return [self.gen(i) for i in range(1, self.rank + 1)]

    def identity(self) -> "Word":
        return Word(self, ())


@dataclass(frozen=True)
class Word:
    """A freely reduced word.  Immutable; all operations return new words."""

    alphabet: Alphabet
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        reduced = free_reduce(self.letters)
        object.__setattr__(self, "letters", reduced)
        for l in reduced:
            if l == 0 or abs(l) > self.alphabet.rank:
                raise MalformedWordError(
                    "letter %d out of range for rank %d" % (l, self.alphabet.rank))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        rank = self.alphabet.rank
        return "".join(gen_name(abs(l), rank, 1 if l > 0 else -1) for l in self.letters)

    def __repr__(self) -> str:
        return "Word(%r, rank=%d)" % (str(self), self.alphabet.rank)

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                "cannot multiply words over ranks %d and %d"
                % (self.alphabet.rank, other.alphabet.rank))
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self.letters if n >= 0 else tuple(-l for l in reversed(self.letters))
        return Word(self.alphabet, base * abs(n))

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple(-l for l in reversed(self.letters)))

    @property
    def is_identity(self) -> bool:
        return not self.letters


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as conjugator * core * conjugator^-1 with core cyclically reduced.

    The core is a minimal-length representative of the conjugacy class of w.

    >>> core, conj = cyclic_reduce(Alphabet(2).word("yxyxY"))
    >>> str(core), str(conj)
    ('xyx', 'y')
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    core = Word(w.alphabet, letters[i:j + 1])
    conj = Word(w.alphabet, letters[:i])
    return core, conj


def is_cyclically_reduced(w: Word) -> bool:
    l = w.letters
    return len(l) < 2 or l[0] != -l[-1]


def mth_root(g: Word, m: int) -> Optional[Word]:
    """Return the unique word r with r**m == g, or None if there is none.

    m must be nonnegative; for negative exponents invert g and pass -m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return g.alphabet.identity() if g.is_identity else None
    core, conj = cyclic_reduce(g)
    n = len(core)
    if n % m != 0:
        return None
    step = n // m
    prefix = core.letters[:step]
    if prefix * m != core.letters:
        return None
    root = Word(g.alphabet, prefix)
    return conj * root * conj.inverse()


def is_proper_power(g: Word) -> bool:
    return any(mth_root(g, m) is not None for m in range(2, len(g) + 1))


def enumerate_reduced(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_len, shortest first.

    Letter order at each position: x before X before y before Y and so on.
    """
    order = [s * i for i in range(1, alphabet.rank + 1) for s in (1, -1)]
    level: list[tuple[int, ...]] = [()]
    yield alphabet.identity()
    for _ in range(max_len):
        nxt: list[tuple[int, ...]] = []
        for prefix in level:
            for l in order:
                if prefix and prefix[-1] == -l:
                    continue
                seq = prefix + (l,)
                nxt.append(seq)
                yield Word(alphabet, seq)
        level = nxt


def enumerate_cyclically_reduced(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All cyclically reduced words of length <= max_len, shortest first."""
    for w in enumerate_reduced(alphabet, max_len):
        if is_cyclically_reduced(w):
            yield w

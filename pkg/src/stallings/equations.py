"""Equations over the free product F_n * G.

An equation is a sequence of letters, each either a variable letter
(index into x_1..x_n, with a sign) or a constant letter (a generator of
the coefficient group G, with a sign).  The sequence is kept reduced as
a word in the free product: adjacent mutually inverse letters of the
same kind cancel.

Text form: variables are v1..vn (V1 is the inverse of v1); constants use
the word syntax of the alphabet, so "v1v1YX" is x_1^2 (xy)^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .words import Alphabet, MalformedWordError, Word, gen_name


@dataclass(frozen=True)
class VarLetter:
    index: int
    sign: int


@dataclass(frozen=True)
class ConstLetter:
    index: int
    sign: int


Letter = Union[VarLetter, ConstLetter]


def _reduce_terms(terms: tuple[Letter, ...]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for t in terms:
        if out and type(out[-1]) is type(t) and out[-1].index == t.index \
                and out[-1].sign == -t.sign:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class Equation:
    """A reduced word psi in F_n * G; psi = 1 is the equation to solve."""

    alphabet: Alphabet
    num_vars: int
    terms: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        for t in self.terms:
            if t.sign not in (1, -1):
                raise MalformedWordError("letter sign must be +1 or -1")
            if isinstance(t, VarLetter):
                if not 1 <= t.index <= self.num_vars:
                    raise MalformedWordError(
                        "variable v%d out of range for %d variables"
                        % (t.index, self.num_vars))
            elif not 1 <= t.index <= self.alphabet.rank:
                raise MalformedWordError(
                    "constant index %d out of range for rank %d"
                    % (t.index, self.alphabet.rank))
        object.__setattr__(self, "terms", _reduce_terms(self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "e"
        parts = []
        for t in self.terms:
            if isinstance(t, VarLetter):
                parts.append(("V%d" if t.sign < 0 else "v%d") % t.index)
            else:
                parts.append(gen_name(t.index, self.alphabet.rank, t.sign))
        return "".join(parts)

    def __repr__(self) -> str:
        return "Equation(%r, vars=%d, rank=%d)" % (
            str(self), self.num_vars, self.alphabet.rank)


@dataclass(frozen=True)
class Assignment:
    """Words substituted for the variables x_1..x_n."""

    images: tuple[Word, ...]


_EQ_TOKEN_RE = re.compile(r"([vV])(\d+)|([xyzXYZ])(\d*)")


def parse_equation(text: str, num_vars: int, alphabet: Alphabet) -> Equation:
    text = text.strip()
    terms: list[Letter] = []
    if text not in ("", "e"):
        pos = 0
        while pos < len(text):
            m = _EQ_TOKEN_RE.match(text, pos)
            if m is None:
                raise MalformedWordError(
                    "unexpected character %r in %r" % (text[pos], text))
            if m.group(1):
                sign = -1 if m.group(1) == "V" else 1
                terms.append(VarLetter(int(m.group(2)), sign))
            else:
                letter = alphabet.word(m.group(0)).letters[0]
                terms.append(ConstLetter(abs(letter), 1 if letter > 0 else -1))
            pos = m.end()
    return Equation(alphabet, num_vars, tuple(terms))


def word_equation(var_word: Word, g: Word) -> Equation:
    """The equation w(x_1..x_n) = g, encoded as w(x)*g^-1.

    ``var_word`` is a word whose alphabet indexes the variables.
    """
    terms: list[Letter] = [VarLetter(abs(l), 1 if l > 0 else -1)
                           for l in var_word.letters]
    terms += [ConstLetter(abs(l), 1 if l > 0 else -1)
              for l in g.inverse().letters]
    return Equation(g.alphabet, var_word.alphabet.rank, tuple(terms))


def power_equation(m: int, g: Word) -> Equation:
    """The m-th power equation x_1^m = g."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return word_equation(Alphabet(1).word("x") ** m, g)


def commutator_equation(g: Word) -> Equation:
    """The equation [x_1, x_2] = g."""
    return word_equation(Alphabet(2).word("xyXY"), g)


def evaluate(eq: Equation, assignment: Assignment) -> Word:
    """Substitute words for the variables and reduce in the free group."""
    if len(assignment.images) != eq.num_vars:
        raise ValueError("assignment has %d words for %d variables"
                         % (len(assignment.images), eq.num_vars))
    for w in assignment.images:
        if w.alphabet != eq.alphabet:
            raise ValueError("assignment words must share the equation's alphabet")
    letters: list[int] = []
    for t in eq.terms:
        if isinstance(t, VarLetter):
            img = assignment.images[t.index - 1]
            letters.extend(img.letters if t.sign > 0
                           else (-l for l in reversed(img.letters)))
        else:
            letters.append(t.sign * t.index)
    return Word(eq.alphabet, tuple(letters))

"""Finite quotients as tuples of permutations.

A quotient of the rank-k free group of order at most d embeds in the
symmetric group on d points via the regular action, so quotients are
represented by homomorphisms into S_d: one permutation per generator.
Permutations are tuples of images on 0..d-1; composition (p * q)(i) =
p[q[i]] applies q first.  Text form is 1-based cycle notation, identity
"()".
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .equations import Assignment, ConstLetter, Equation, evaluate
from .words import Word

Perm = tuple[int, ...]

MAX_IMAGE_DEGREE = 8
MAX_SOLVE_TUPLES = 10_000_000
MAX_HOM_ENUMERATION = 100_000_000


class GuardExceededError(RuntimeError):
    """A search bound was exceeded; raise the limit explicitly to proceed."""


def perm_identity(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(p: Perm, q: Perm) -> Perm:
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def perm_pow(p: Perm, m: int) -> Perm:
    if m < 0:
        return perm_pow(perm_inv(p), -m)
    acc = perm_identity(len(p))
    for _ in range(m):
        acc = perm_mul(acc, p)
    return acc


def format_perm(p: Perm) -> str:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        cycles.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) if cycles else "()"


def parse_perm(text: str, degree: int) -> Perm:
    text = text.strip()
    if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\))+", text):
        raise ValueError("bad cycle notation %r" % text)
    images = list(range(degree))
    for cycle_text in re.findall(r"\(([^()]*)\)", text):
        points = [int(t) - 1 for t in cycle_text.split()]
        if any(not 0 <= pt < degree for pt in points):
            raise ValueError("point out of range for degree %d in %r" % (degree, text))
        if len(set(points)) != len(points):
            raise ValueError("repeated point in %r" % text)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return tuple(images)


@dataclass(frozen=True)
class FiniteQuotientHom:
    """A homomorphism from the rank-k free group into S_degree."""

    rank: int
    degree: int
    gens: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if len(self.gens) != self.rank:
            raise ValueError("expected %d generator images, got %d"
                             % (self.rank, len(self.gens)))
        for p in self.gens:
            if sorted(p) != list(range(self.degree)):
                raise ValueError("%r is not a permutation of degree %d"
                                 % (p, self.degree))

    def to_json_dict(self, solvable: Optional[bool] = None,
                     witness: Optional[tuple[Perm, ...]] = None) -> dict:
        out: dict = {"degree": self.degree,
                     "gens": [format_perm(p) for p in self.gens]}
        if solvable is not None:
            out["solvable"] = solvable
        if witness is not None:
            out["witness"] = [format_perm(p) for p in witness]
        return out


def apply_hom(h: FiniteQuotientHom, w: Word) -> Perm:
    """Image of a word; the word's rank must not exceed the hom's."""
    if w.alphabet.rank > h.rank:
        raise ValueError("word rank %d exceeds hom rank %d"
                         % (w.alphabet.rank, h.rank))
    acc = perm_identity(h.degree)
    for l in w.letters:
        p = h.gens[abs(l) - 1]
        acc = perm_mul(acc, p if l > 0 else perm_inv(p))
    return acc


def image_elements(h: FiniteQuotientHom, max_degree: int = MAX_IMAGE_DEGREE
                   ) -> tuple[Perm, ...]:
    """Closure of the generator images, in breadth-first discovery order."""
    if h.degree > max_degree:
        raise GuardExceededError(
            "degree %d exceeds the image closure guard %d" % (h.degree, max_degree))
    cached = h.__dict__.get("_image")
    if cached is not None:
        return cached
    start = perm_identity(h.degree)
    order = [start]
    seen = {start}
    queue = [start]
    while queue:
        p = queue.pop(0)
        for g in h.gens:
            q = perm_mul(p, g)
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    result = tuple(order)
    h.__dict__["_image"] = result
    return result


@dataclass(frozen=True)
class QuotientSolution:
    assignment: tuple[Perm, ...]


def _evaluate_in_quotient(eq: Equation, h: FiniteQuotientHom,
                          values: tuple[Perm, ...]) -> Perm:
    acc = perm_identity(h.degree)
    for t in eq.terms:
        if isinstance(t, ConstLetter):
            p = h.gens[t.index - 1]
        else:
            p = values[t.index - 1]
        acc = perm_mul(acc, p if t.sign > 0 else perm_inv(p))
    return acc


def solve_in_quotient(eq: Equation, h: FiniteQuotientHom,
                      max_tuples: int = MAX_SOLVE_TUPLES,
                      max_image_degree: int = MAX_IMAGE_DEGREE
                      ) -> Optional[QuotientSolution]:
    """First solution of eq over the image, in enumeration order, or None."""
    if eq.alphabet.rank > h.rank:
        raise ValueError("equation rank %d exceeds hom rank %d"
                         % (eq.alphabet.rank, h.rank))
    image = image_elements(h, max_image_degree)
    if len(image) ** eq.num_vars > max_tuples:
        raise GuardExceededError(
            "%d^%d assignment tuples exceed the solve guard %d"
            % (len(image), eq.num_vars, max_tuples))
    identity = perm_identity(h.degree)
    for values in itertools.product(image, repeat=eq.num_vars):
        if _evaluate_in_quotient(eq, h, values) == identity:
            return QuotientSolution(values)
    return None


def enumerate_homs(rank: int, degree: int,
                   max_total: int = MAX_HOM_ENUMERATION
                   ) -> Iterator[FiniteQuotientHom]:
    """All rank-tuples of degree-d permutations, lexicographic by one-line
    notation."""
    import math
    total = math.factorial(degree) ** rank
    if total > max_total:
        raise GuardExceededError(
            "%d homs exceed the enumeration guard %d" % (total, max_total))
    for gens in itertools.product(itertools.permutations(range(degree)),
                                  repeat=rank):
        yield FiniteQuotientHom(rank, degree, gens)


def factors_through(fine: FiniteQuotientHom, coarse: FiniteQuotientHom
                    ) -> Optional[dict[Perm, Perm]]:
    """The map image(fine) -> image(coarse) sending generator images to
    generator images, if it is well defined."""
    if fine.rank != coarse.rank:
        raise ValueError("homs must share a rank")
    mapping = {perm_identity(fine.degree): perm_identity(coarse.degree)}
    queue = [perm_identity(fine.degree)]
    while queue:
        p = queue.pop(0)
        for gf, gc in zip(fine.gens, coarse.gens):
            q = perm_mul(p, gf)
            qc = perm_mul(mapping[p], gc)
            if q in mapping:
                if mapping[q] != qc:
                    return None
            else:
                mapping[q] = qc
                queue.append(q)
    return mapping


def monotonicity_check(eq: Equation, fine: FiniteQuotientHom,
                       coarse: FiniteQuotientHom) -> bool:
    """Solvability may only grow when passing to a coarser quotient.

    Raises ValueError unless coarse factors through fine.
    """
    if factors_through(fine, coarse) is None:
        raise ValueError("coarse hom does not factor through fine hom")
    if solve_in_quotient(eq, fine) is None:
        return True
    return solve_in_quotient(eq, coarse) is not None


def product_hom(a: FiniteQuotientHom, b: FiniteQuotientHom) -> FiniteQuotientHom:
    """Act on the disjoint union of the two point sets."""
    if a.rank != b.rank:
        raise ValueError("homs must share a rank")
    gens = tuple(pa + tuple(x + a.degree for x in pb)
                 for pa, pb in zip(a.gens, b.gens))
    return FiniteQuotientHom(a.rank, a.degree + b.degree, gens)

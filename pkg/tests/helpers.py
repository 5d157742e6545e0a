"""Shared random generators for the test suite.

Everything takes an explicit random.Random so tests stay reproducible;
seeds live at the call sites.
"""

from __future__ import annotations

import random

from stallings import Alphabet, LabeledGraph, StallingsGraph, Word, fold

LETTERS2 = (1, -1, 2, -2)


def random_letters(rng: random.Random, rank: int, length: int) -> tuple[int, ...]:
    """A reduced letter tuple of exactly the requested length."""
    pool = [s * i for i in range(1, rank + 1) for s in (1, -1)]
    out: list[int] = []
    for _ in range(length):
        out.append(rng.choice([l for l in pool if not out or l != -out[-1]]))
    return tuple(out)


def random_word(rng: random.Random, alphabet: Alphabet, max_len: int,
                min_len: int = 0) -> Word:
    return Word(alphabet, random_letters(
        rng, alphabet.rank, rng.randint(min_len, max_len)))


def random_gens(rng: random.Random, alphabet: Alphabet, max_gens: int = 3,
                max_len: int = 4) -> list[Word]:
    return [random_word(rng, alphabet, max_len, min_len=1)
            for _ in range(rng.randint(1, max_gens))]


def random_labeled_graph(rng: random.Random, rank: int = 2,
                         max_vertices: int = 10) -> LabeledGraph:
    """Connected labeled graph: a random spanning tree plus extra edges."""
    n = rng.randint(1, max_vertices)
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        label = rng.randint(1, rank)
        edges.append((u, label, v) if rng.random() < 0.5 else (v, label, u))
    for _ in range(rng.randint(1, n + 2)):
        edges.append((rng.randrange(n), rng.randint(1, rank), rng.randrange(n)))
    return LabeledGraph(rank, n, tuple(edges))


def random_folded_core(rng: random.Random, rank: int = 2,
                       max_vertices: int = 10) -> StallingsGraph:
    return fold(random_labeled_graph(rng, rank, max_vertices))

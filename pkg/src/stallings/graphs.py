"""Stallings graphs for finitely generated subgroups of free groups.

Edges are stored in their positive direction only: an edge (u, i, v)
means u --x_i--> v, and traversing it backwards reads the inverse
letter.  A StallingsGraph is folded (at most one edge per label leaving
and entering each vertex), is a core graph (no degree-1 vertices other
than the basepoint), and is stored in canonical form: vertex 0 is the
basepoint and the remaining vertices are numbered by a breadth-first
traversal that scans labels in increasing order, positive direction
before negative.  Canonical form makes graph equality the same thing as
basepointed labeled-graph isomorphism.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .words import Alphabet, MalformedWordError, Word, gen_name

Edge = tuple[int, int, int]  # (source, label, target), label 1-based


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
        return min(ra, rb)


@dataclass(frozen=True)
class LabeledGraph:
    """A connected edge-labeled digraph with a basepoint; may be unfolded."""

    rank: int
    num_vertices: int
    edges: tuple[Edge, ...]
    basepoint: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.basepoint < max(self.num_vertices, 1):
            raise ValueError("basepoint out of range")
        for (u, i, v) in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError("edge endpoint out of range")
            if not 1 <= i <= self.rank:
                raise ValueError("edge label %d out of range for rank %d" % (i, self.rank))


def wedge_of_cycles(gens: Sequence[Word], rank: Optional[int] = None) -> LabeledGraph:
    """One cycle per generator, all sharing the basepoint.  Identity words
    contribute nothing."""
    words = [w for w in gens if not w.is_identity]
    if rank is None:
        if not gens:
            raise ValueError("rank is required when no generators are given")
        rank = gens[0].alphabet.rank
    edges: list[Edge] = []
    n = 1
    for w in words:
        prev = 0
        for pos, l in enumerate(w.letters):
            nxt = 0 if pos == len(w.letters) - 1 else n
            if pos < len(w.letters) - 1:
                n += 1
            if l > 0:
                edges.append((prev, l, nxt))
            else:
                edges.append((nxt, -l, prev))
            prev = nxt
    return LabeledGraph(rank, n, tuple(edges))


def _base_component(num_vertices: int, edges: Iterable[Edge], base: int
                    ) -> tuple[set[int], list[Edge]]:
    adj: dict[int, list[int]] = {}
    for (u, _, v) in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {base}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    kept = [e for e in edges if e[0] in seen]
    return seen, kept


def _core_trim(vertices: set[int], edges: list[Edge], base: int
               ) -> tuple[set[int], list[Edge]]:
    """Iteratively delete non-basepoint vertices of total degree <= 1."""
    edges = list(edges)
    while True:
        deg: dict[int, int] = {v: 0 for v in vertices}
        for (u, _, v) in edges:
            deg[u] += 1
            deg[v] += 1
        drop = {v for v in vertices if v != base and deg[v] <= 1}
        if not drop:
            return vertices, edges
        vertices -= drop
        edges = [e for e in edges if e[0] not in drop and e[2] not in drop]


def _canonical_order(vertices: set[int], edges: list[Edge], base: int, rank: int
                     ) -> dict[int, int]:
    """Canonical numbering by BFS, labels ascending, positive before negative.
    Requires a folded graph."""
    out: dict[tuple[int, int], int] = {}
    inn: dict[tuple[int, int], int] = {}
    for (u, i, v) in edges:
        out[(u, i)] = v
        inn[(v, i)] = u
    number = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for i in range(1, rank + 1):
            for nbr in (out.get((v, i)), inn.get((v, i))):
                if nbr is not None and nbr not in number:
                    number[nbr] = len(number)
                    queue.append(nbr)
    if len(number) != len(vertices):
        raise ValueError("graph is not connected")
    return number


@dataclass(frozen=True)
class StallingsGraph:
    """Folded core graph in canonical form; the basepoint is vertex 0."""

    rank: int
    num_vertices: int
    edges: tuple[Edge, ...]

    basepoint = 0

    def __post_init__(self) -> None:
        seen_out: set[tuple[int, int]] = set()
        seen_in: set[tuple[int, int]] = set()
        for (u, i, v) in self.edges:
            if (u, i) in seen_out or (v, i) in seen_in:
                raise ValueError("graph is not folded")
            seen_out.add((u, i))
            seen_in.add((v, i))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @cached_property
    def out(self) -> dict[tuple[int, int], int]:
        return {(u, i): v for (u, i, v) in self.edges}

    @cached_property
    def inn(self) -> dict[tuple[int, int], int]:
        return {(v, i): u for (u, i, v) in self.edges}

    @property
    def cycle_rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    @classmethod
    def bouquet(cls, rank: int) -> "StallingsGraph":
        return cls(rank, 1, tuple((0, i, 0) for i in range(1, rank + 1)))

    def trace(self, letters: Iterable[int], start: int = 0) -> Optional[int]:
        """Follow a letter sequence; None as soon as an edge is missing."""
        v = start
        for l in letters:
            v = self.out.get((v, l)) if l > 0 else self.inn.get((v, -l))
            if v is None:
                return None
        return v

    def contains(self, w: Word) -> bool:
        return self.trace(w.letters) == self.basepoint

    def to_dot(self) -> str:
        lines = ["digraph stallings {", "  rankdir=LR;"]
        for v in range(self.num_vertices):
            shape = "doublecircle" if v == self.basepoint else "circle"
            lines.append('  %d [shape=%s];' % (v, shape))
        for (u, i, v) in self.edges:
            lines.append('  %d -> %d [label="%s"];' % (u, v, gen_name(i, self.rank)))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _freeze(rank: int, vertices: set[int], edges: list[Edge], base: int
            ) -> StallingsGraph:
    number = _canonical_order(vertices, edges, base, rank)
    renumbered = tuple(sorted((number[u], i, number[v]) for (u, i, v) in edges))
    return StallingsGraph(rank, len(vertices), renumbered)


def fold(graph: LabeledGraph | StallingsGraph,
         rng: Optional[random.Random] = None) -> StallingsGraph:
    """Fold, trim to the core, and put in canonical form.

    Folding identifies the far endpoints of equally labeled edges that
    share a source (or share a target) until no such pair remains.  The
    result does not depend on the identification order; pass ``rng`` to
    exercise a random order.
    """
    if isinstance(graph, StallingsGraph):
        base, nv = 0, graph.num_vertices
    else:
        base, nv = graph.basepoint, graph.num_vertices
    _, kept = _base_component(nv, graph.edges, base)
    uf = _UnionFind(nv)
    edges = set(kept)
    while True:
        merges: list[tuple[int, int]] = []
        by_out: dict[tuple[int, int], int] = {}
        by_in: dict[tuple[int, int], int] = {}
        for (u, i, v) in edges:
            w = by_out.get((u, i))
            if w is not None and w != v:
                merges.append((min(v, w), max(v, w)))
            else:
                by_out[(u, i)] = v
            w = by_in.get((v, i))
            if w is not None and w != u:
                merges.append((min(u, w), max(u, w)))
            else:
                by_in[(v, i)] = u
        if not merges:
            break
        a, b = rng.choice(merges) if rng is not None else min(merges)
        uf.union(a, b)
        edges = {(uf.find(u), i, uf.find(v)) for (u, i, v) in edges}
    base = uf.find(base)
    vertices = {v for (u, _, w) in edges for v in (u, w)} | {base}
    vertices, trimmed = _core_trim(vertices, sorted(edges), base)
    return _freeze(graph.rank, vertices, trimmed, base)


def graph_from_generators(gens: Sequence[Word], rank: Optional[int] = None
                          ) -> StallingsGraph:
    """The Stallings graph of the subgroup generated by ``gens``."""
    return fold(wedge_of_cycles(gens, rank))


def membership(graph: StallingsGraph, w: Word) -> bool:
    """Whether w lies in the subgroup the graph represents."""
    return graph.contains(w)


def intersect(a: StallingsGraph, b: StallingsGraph) -> StallingsGraph:
    """Stallings graph of the intersection, via the basepointed product graph."""
    if a.rank != b.rank:
        raise ValueError("graphs must share an alphabet rank")
    start = (0, 0)
    ids = {start: 0}
    queue = deque([start])
    edges: set[tuple[tuple[int, int], int, tuple[int, int]]] = set()
    while queue:
        state = queue.popleft()
        pa, pb = state
        for i in range(1, a.rank + 1):
            qa, qb = a.out.get((pa, i)), b.out.get((pb, i))
            if qa is not None and qb is not None:
                nxt = (qa, qb)
                edges.add((state, i, nxt))
                if nxt not in ids:
                    ids[nxt] = len(ids)
                    queue.append(nxt)
            qa, qb = a.inn.get((pa, i)), b.inn.get((pb, i))
            if qa is not None and qb is not None:
                prv = (qa, qb)
                edges.add((prv, i, state))
                if prv not in ids:
                    ids[prv] = len(ids)
                    queue.append(prv)
    flat = [(ids[u], i, ids[v]) for (u, i, v) in edges]
    vertices, trimmed = _core_trim(set(ids.values()), sorted(flat), 0)
    return _freeze(a.rank, vertices, trimmed, 0)


def parse_graph_text(text: str) -> LabeledGraph:
    """Fixture format: optional "rank K" line, then one "u label v" edge
    per line; # starts a comment; the basepoint is vertex 0."""
    rank: Optional[int] = None
    raw: list[tuple[int, str, int]] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "rank":
            rank = int(parts[1])
            continue
        if len(parts) != 3:
            raise MalformedWordError("expected 'u label v', got %r" % line)
        raw.append((int(parts[0]), parts[1], int(parts[2])))
    probe = Alphabet(max(3, rank or 3) if rank is None else rank)
    labels = {}
    for (_, name, _) in raw:
        w = probe.word(name)
        if len(w) != 1 or w.letters[0] < 0:
            raise MalformedWordError("edge labels must be single positive generators")
        labels[name] = w.letters[0]
    if rank is None:
        rank = max(labels.values(), default=1)
    nv = max([max(u, v) for (u, _, v) in raw], default=0) + 1
    edges = tuple((u, labels[name], v) for (u, name, v) in raw)
    return LabeledGraph(rank, nv, edges)


def load_graph_file(path) -> LabeledGraph:
    with open(path) as fh:
        return parse_graph_text(fh.read())


def load_words_file(path, alphabet: Alphabet) -> list[Word]:
    """One word per line; # starts a comment."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(alphabet.word(line))
    return out

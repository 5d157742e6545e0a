"""Bases, graph morphisms, and free-factor certificates.

The cycle basis of a folded core graph comes from a spanning tree: each
non-tree edge e contributes the word read along base -> e -> base, with
tree paths on both sides.  The tree is grown breadth-first scanning
labels in increasing order, positive direction before negative, so the
basis of a canonical-form graph is reproducible.  Each basis word is
reported in the orientation that is lexicographically smaller (ordering
letters by generator index, positive before negative); the two
orientations generate the same subgroup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Edge, StallingsGraph, _core_trim, _freeze, graph_from_generators, intersect
from .words import Alphabet, Word


def _orient_key(w: Word) -> tuple:
    return tuple((abs(l), 0 if l > 0 else 1) for l in w.letters)


def _oriented(w: Word) -> Word:
    inv = w.inverse()
    return min(w, inv, key=_orient_key)


@dataclass(frozen=True)
class SpanningTreeBasis:
    tree: frozenset[Edge]
    basis: tuple[tuple[Edge, Word], ...]

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(w for (_, w) in self.basis)


def _grow_tree(g: StallingsGraph, allowed: Optional[frozenset[Edge]],
               path: dict[int, tuple[int, ...]], order: list[int],
               queue: deque, tree: set[Edge]) -> None:
    while queue:
        v = queue.popleft()
        for i in range(1, g.rank + 1):
            w = g.out.get((v, i))
            if w is not None and (allowed is None or (v, i, w) in allowed) \
                    and w not in path:
                path[w] = path[v] + (i,)
                tree.add((v, i, w))
                order.append(w)
                queue.append(w)
            u = g.inn.get((v, i))
            if u is not None and (allowed is None or (u, i, v) in allowed) \
                    and u not in path:
                path[u] = path[v] + (-i,)
                tree.add((u, i, v))
                order.append(u)
                queue.append(u)


def _cycle_word(g: StallingsGraph, path: dict[int, tuple[int, ...]], e: Edge) -> Word:
    (u, i, v) = e
    letters = path[u] + (i,) + tuple(-l for l in reversed(path[v]))
    return _oriented(Word(Alphabet(g.rank), letters))


def spanning_tree_basis(g: StallingsGraph) -> SpanningTreeBasis:
    """Free basis of the subgroup, one word per non-tree edge.

    len(basis) == len(edges) - num_vertices + 1.
    """
    path = {0: ()}
    order = [0]
    tree: set[Edge] = set()
    _grow_tree(g, None, path, order, deque([0]), tree)
    non_tree = sorted(set(g.edges) - tree)
    basis = tuple((e, _cycle_word(g, path, e)) for e in non_tree)
    return SpanningTreeBasis(frozenset(tree), basis)


@dataclass(frozen=True)
class GraphMorphism:
    """Label- and basepoint-preserving graph map."""

    source: StallingsGraph
    target: StallingsGraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[tuple[Edge, Edge], ...]


def subgroup_of(h: StallingsGraph, n: StallingsGraph) -> Optional[GraphMorphism]:
    """The unique basepointed morphism from h into n, if one exists.

    A morphism exists exactly when the subgroup of h is contained in the
    subgroup of n.
    """
    if h.rank != n.rank:
        raise ValueError("graphs must share an alphabet rank")
    f: list[Optional[int]] = [None] * h.num_vertices
    f[0] = 0
    queue = deque([0])
    seen = {0}
    while queue:
        v = queue.popleft()
        for i in range(1, h.rank + 1):
            w = h.out.get((v, i))
            if w is not None:
                fw = n.out.get((f[v], i))
                if fw is None:
                    return None
                if f[w] is None:
                    f[w] = fw
                elif f[w] != fw:
                    return None
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
            u = h.inn.get((v, i))
            if u is not None:
                fu = n.inn.get((f[v], i))
                if fu is None:
                    return None
                if f[u] is None:
                    f[u] = fu
                elif f[u] != fu:
                    return None
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    vm = tuple(f)  # type: ignore[arg-type]
    em = tuple(((u, i, v), (vm[u], i, vm[v])) for (u, i, v) in h.edges)
    return GraphMorphism(h, n, vm, em)


def is_injective(m: GraphMorphism) -> bool:
    images = [e for (_, e) in m.edge_map]
    return len(set(m.vertex_map)) == len(m.vertex_map) \
        and len(set(images)) == len(images)


@dataclass(frozen=True)
class FreeFactorCertificate:
    """Witness that the source subgroup is a free factor of the target.

    basis_h is a subset of basis_n verbatim: the target basis extends a
    spanning tree of the embedded image, so the image's cycle words are
    reused.  This certificate is sufficient but one-sided; failure to
    produce one proves nothing.
    """

    morphism: GraphMorphism
    basis_h: tuple[Word, ...]
    basis_n: tuple[Word, ...]


def free_factor_certificate(h: StallingsGraph, n: StallingsGraph
                            ) -> Optional[FreeFactorCertificate]:
    m = subgroup_of(h, n)
    if m is None or not is_injective(m):
        return None
    image_edges = frozenset(e for (_, e) in m.edge_map)
    path = {0: ()}
    order = [0]
    tree: set[Edge] = set()
    _grow_tree(n, image_edges, path, order, deque([0]), tree)
    basis_h = tuple(_cycle_word(n, path, e) for e in sorted(image_edges - tree))
    _grow_tree(n, None, path, order, deque(order), tree)
    basis_n = tuple(_cycle_word(n, path, e) for e in sorted(set(n.edges) - tree))
    assert set(basis_h) <= set(basis_n)
    return FreeFactorCertificate(m, basis_h, basis_n)


@dataclass(frozen=True)
class DirectedFamilyFactor:
    """Result of pushing generators through a family of overgroups.

    h is the image subgroup; j0 indexes ``candidates``, which lists the
    family members first and any intersections that had to be formed
    after them, so j0 < len(family) means an original member certified.
    """

    h: StallingsGraph
    j0: int
    target: StallingsGraph
    certificate: FreeFactorCertificate
    candidates: tuple[StallingsGraph, ...]


def _traced_subgraph(n: StallingsGraph, words: Sequence[Word]) -> StallingsGraph:
    vertices = {0}
    edges: set[Edge] = set()
    for w in words:
        v = 0
        for l in w.letters:
            if l > 0:
                nxt = n.out[(v, l)]
                edges.add((v, l, nxt))
            else:
                nxt = n.inn[(v, -l)]
                edges.add((nxt, -l, v))
            v = nxt
            vertices.add(v)
    vertices, trimmed = _core_trim(vertices, sorted(edges), 0)
    return _freeze(n.rank, vertices, trimmed, 0)


def directed_family_factor(gens: Sequence[Word], family: Sequence[StallingsGraph]
                           ) -> DirectedFamilyFactor:
    """Realize the generators inside the intersection of the family and
    certify the resulting subgroup as a free factor of some member.

    Every generator must belong to every family member.  The certified
    target is searched among the family members first, then pairwise
    intersections, then the full intersection (which always certifies,
    since the image embeds in it by construction).
    """
    if not family:
        raise ValueError("family must be nonempty")
    for j, member in enumerate(family):
        for s in gens:
            if not member.contains(s):
                raise ValueError(
                    "generator %s is not a member of family[%d]" % (s, j))
    total = family[0]
    for member in family[1:]:
        total = intersect(total, member)
    h = _traced_subgraph(total, [w for w in gens if not w.is_identity])
    candidates = list(family)
    for a in range(len(family)):
        for b in range(a + 1, len(family)):
            candidates.append(intersect(family[a], family[b]))
    candidates.append(total)
    for j0, cand in enumerate(candidates):
        cert = free_factor_certificate(h, cand)
        if cert is not None:
            for s in gens:
                assert h.contains(s)
            return DirectedFamilyFactor(h, j0, cand, cert, tuple(candidates))
    raise AssertionError("the full intersection must certify")

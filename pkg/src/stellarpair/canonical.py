"""Canonical labeling and isomorphism testing for desk-scale complexes.

Backtracking individualization-refinement over the vertex/facet incidence
structure, with orbit pruning from automorphisms discovered at equal
leaves.  Intended for small complexes; a vertex guard raises
ResourceLimitError beyond it.
"""

from __future__ import annotations

from .complexes import Simplex, SimplicialComplex, f_vector
from .errors import ResourceLimitError
from .labels import VertexLabel

DEFAULT_VERTEX_GUARD = 16
_LEAF_BUDGET = 50_000

CanonicalForm = tuple[tuple[int, ...], ...]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _refine(colors: list[int], facet_members: list[tuple[int, ...]], facets_of: list[tuple[int, ...]]) -> list[int]:
    """Stable color refinement on the bipartite vertex/facet incidence graph."""
    n = len(colors)
    while True:
        fsig = [
            (len(members), tuple(sorted(colors[v] for v in members)))
            for members in facet_members
        ]
        vsig = [
            (colors[v], tuple(sorted(fsig[i] for i in facets_of[v])))
            for v in range(n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(vsig)))}
        new_colors = [ranking[s] for s in vsig]
        if len(set(new_colors)) == len(set(colors)):
            return new_colors
        colors = new_colors


def _leaf_form(colors: list[int], facet_members: list[tuple[int, ...]]) -> tuple[CanonicalForm, list[int]]:
    order = sorted(range(len(colors)), key=lambda v: colors[v])
    rank = [0] * len(colors)
    for pos, v in enumerate(order):
        rank[v] = pos
    form = tuple(sorted(tuple(sorted(rank[v] for v in members)) for members in facet_members))
    return form, rank


def _canonical_rank(cx: SimplicialComplex, guard: int) -> tuple[CanonicalForm, dict[VertexLabel, int]]:
    """Canonical form plus the vertex -> canonical-index map realizing it."""
    verts = cx.vertices()
    n = len(verts)
    if n > guard:
        raise ResourceLimitError(
            f"complex has {n} vertices, above the isomorphism guard of {guard}",
            vertices=n,
            guard=guard,
        )
    vid = {v: i for i, v in enumerate(verts)}
    facet_members = [tuple(vid[v] for v in f.vertices) for f in cx.sorted_facets()]
    facets_of: list[list[int]] = [[] for _ in range(n)]
    for i, members in enumerate(facet_members):
        for v in members:
            facets_of[v].append(i)
    facets_of_t = [tuple(ids) for ids in facets_of]

    if n == 0:
        return (), {}

    base = _refine([0] * n, facet_members, facets_of_t)

    best: list = [None, None]  # form, rank
    orbits = _UnionFind(n)
    leaves_seen: dict[CanonicalForm, list[int]] = {}
    leaf_count = 0

    def visit(colors: list[int]) -> None:
        nonlocal leaf_count
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        target = None
        for color in sorted(classes):
            if len(classes[color]) > 1:
                target = classes[color]
                break
        if target is None:
            leaf_count += 1
            if leaf_count > _LEAF_BUDGET:
                raise ResourceLimitError("canonical labeling leaf budget exceeded", leaves=leaf_count)
            form, rank = _leaf_form(colors, facet_members)
            prior = leaves_seen.get(form)
            if prior is not None:
                # equal forms certify an automorphism; fold it into the orbits
                inv_prior = [0] * n
                for v in range(n):
                    inv_prior[prior[v]] = v
                for v in range(n):
                    orbits.union(v, inv_prior[rank[v]])
            else:
                leaves_seen[form] = rank
            if best[0] is None or form < best[0]:
                best[0] = form
                best[1] = rank
            return
        tried: list[int] = []
        for u in target:
            if any(orbits.find(u) == orbits.find(t) for t in tried):
                continue
            tried.append(u)
            branched = list(colors)
            branched[u] = -1  # individualize: strictly smallest color
            visit(_refine(branched, facet_members, facets_of_t))

    visit(base)
    rank = best[1]
    return best[0], {verts[v]: rank[v] for v in range(n)}


def canonical_form(cx: SimplicialComplex, *, guard: int = DEFAULT_VERTEX_GUARD) -> CanonicalForm:
    """A label-independent fingerprint: equal forms iff isomorphic complexes."""
    return _canonical_rank(cx, guard)[0]


def isomorphism(
    a: SimplicialComplex,
    b: SimplicialComplex,
    *,
    guard: int = DEFAULT_VERTEX_GUARD,
) -> dict[VertexLabel, VertexLabel] | None:
    """A vertex bijection carrying the facets of `a` onto the facets of `b`, or None."""
    for cx in (a, b):
        if cx.num_vertices() > guard:
            raise ResourceLimitError(
                f"complex has {cx.num_vertices()} vertices, above the isomorphism guard of {guard}",
                vertices=cx.num_vertices(),
                guard=guard,
            )
    if a.facets == b.facets:
        return {v: v for v in a.vertex_set()}
    if a.num_vertices() != b.num_vertices() or f_vector(a) != f_vector(b):
        return None
    form_a, rank_a = _canonical_rank(a, guard)
    form_b, rank_b = _canonical_rank(b, guard)
    if form_a != form_b:
        return None
    by_rank = {i: v for v, i in rank_b.items()}
    mapping = {v: by_rank[i] for v, i in rank_a.items()}
    # paranoia: the composed map must carry facets onto facets
    image = frozenset(
        Simplex(tuple(sorted(mapping[v] for v in f.vertices))) for f in a.facets
    )
    if image != b.facets:
        raise AssertionError("canonical labeling produced an inconsistent bijection")
    return mapping

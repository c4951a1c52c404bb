"""Abstract simplicial complexes stored by facets.

A :class:`Simplex` is a sorted, duplicate-free tuple of interned vertex
labels; a :class:`SimplicialComplex` is the downward closure of an
antichain of facets.  Complexes are immutable values: every operation
returns a new complex, and the lazily built face cache is filled with an
idempotent assignment so concurrent readers are safe.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Iterator

from .errors import AbsentFaceError, MalformedInputError, StellarPairError
from .labels import VertexLabel, vlabel

_DEBUG_VALIDATE = os.environ.get("STELLARPAIR_DEBUG_VALIDATE", "") == "1"


def set_debug_validation(enabled: bool) -> bool:
    """Toggle invariant re-checking after every construction; returns the old setting."""
    global _DEBUG_VALIDATE
    old = _DEBUG_VALIDATE
    _DEBUG_VALIDATE = bool(enabled)
    return old


class Simplex:
    """A finite set of vertex labels, kept sorted by token."""

    __slots__ = ("vertices", "_vset", "_hash", "_key")

    vertices: tuple[VertexLabel, ...]

    def __init__(self, vertices: tuple[VertexLabel, ...]):
        # Trusted constructor: `vertices` must already be sorted and duplicate-free.
        self.vertices = vertices
        self._vset = frozenset(vertices)
        self._hash = hash(vertices)
        self._key = None

    @classmethod
    def of(cls, labels: Iterable) -> "Simplex":
        """Build a simplex from label-ish values, with set semantics (duplicates merge)."""
        if isinstance(labels, Simplex):
            return labels
        return cls(tuple(sorted(set(vlabel(x) for x in labels))))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def sort_key(self) -> tuple:
        """Canonical order: by dimension first, then lexicographically by tokens."""
        key = self._key
        if key is None:
            key = (len(self.vertices), tuple(v.token for v in self.vertices))
            self._key = key
        return key

    def tokens(self) -> tuple[str, ...]:
        return self.sort_key()[1]

    def issubset(self, other: "Simplex") -> bool:
        return self._vset <= other._vset

    def intersection(self, other: "Simplex") -> "Simplex":
        common = self._vset & other._vset
        if not common:
            return EMPTY_SIMPLEX
        return Simplex(tuple(sorted(common)))

    def union(self, other: "Simplex") -> "Simplex":
        return Simplex(tuple(sorted(self._vset | other._vset)))

    def difference(self, labels) -> "Simplex":
        drop = {vlabel(x) for x in labels}
        return Simplex(tuple(v for v in self.vertices if v not in drop))

    def subfaces(self, include_self: bool = True) -> Iterator["Simplex"]:
        """All nonempty subsimplices."""
        top = len(self.vertices) if include_self else len(self.vertices) - 1
        for k in range(1, top + 1):
            for comb in combinations(self.vertices, k):
                yield Simplex(comb)

    def boundary(self) -> Iterator["Simplex"]:
        """Codimension-one subfaces."""
        for i in range(len(self.vertices)):
            yield Simplex(self.vertices[:i] + self.vertices[i + 1 :])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, label):
        return vlabel(label) in self._vset

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, Simplex):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Simplex"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.vertices:
            return "{}"
        return "{" + ",".join(v.token for v in self.vertices) + "}"

    def __repr__(self):
        return f"Simplex({[v.token for v in self.vertices]})"


EMPTY_SIMPLEX = Simplex(())


def as_simplex(value) -> Simplex:
    """Coerce a Simplex or an iterable of labels into a Simplex."""
    if isinstance(value, Simplex):
        return value
    if isinstance(value, (str, int, VertexLabel)):
        return Simplex.of([value])
    return Simplex.of(value)


def _reduce_to_antichain(simplices: Iterable[Simplex]) -> frozenset[Simplex]:
    """Drop dominated and duplicate simplices; empty simplices are ignored."""
    kept: list[Simplex] = []
    by_vertex: dict[VertexLabel, set[int]] = {}
    for s in sorted(set(simplices), key=lambda t: -len(t)):
        if len(s) == 0:
            continue
        candidates: set[int] | None = None
        for v in s.vertices:
            ids = by_vertex.get(v)
            if ids is None:
                candidates = None
                break
            candidates = set(ids) if candidates is None else candidates & ids
            if not candidates:
                candidates = None
                break
        if candidates:
            continue  # some kept facet contains every vertex of s
        idx = len(kept)
        kept.append(s)
        for v in s.vertices:
            by_vertex.setdefault(v, set()).add(idx)
    return frozenset(kept)


class SimplicialComplex:
    """A downward-closed family of simplices, stored by its facet antichain."""

    __slots__ = ("facets", "_faces_by_dim", "_vertex_to_facets", "_facet_list", "_vertices")

    facets: frozenset[Simplex]

    def __init__(self, facets: Iterable[Simplex] | frozenset[Simplex], *, _trusted: bool = False):
        if _trusted and isinstance(facets, frozenset):
            self.facets = facets
        else:
            self.facets = _reduce_to_antichain(facets)
        self._faces_by_dim = None
        self._vertex_to_facets = None
        self._facet_list = None
        self._vertices = None
        if _DEBUG_VALIDATE:
            self.validate()

    # -- construction -------------------------------------------------

    @classmethod
    def from_simplices(cls, simplices: Iterable) -> "SimplicialComplex":
        return cls(as_simplex(s) for s in simplices)

    @classmethod
    def _from_antichain(cls, facets: Iterable[Simplex]) -> "SimplicialComplex":
        """Trusted fast path for operations whose output is an antichain by construction."""
        return cls(frozenset(facets), _trusted=True)

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return max((f.dim for f in self.facets), default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def vertex_set(self) -> frozenset[VertexLabel]:
        verts = self._vertices
        if verts is None:
            verts = frozenset(v for f in self.facets for v in f.vertices)
            self._vertices = verts
        return verts

    def vertices(self) -> tuple[VertexLabel, ...]:
        return tuple(sorted(self.vertex_set()))

    def num_vertices(self) -> int:
        return len(self.vertex_set())

    def sorted_facets(self) -> tuple[Simplex, ...]:
        facets = self._facet_list
        if facets is None:
            facets = tuple(sorted(self.facets, key=Simplex.sort_key))
            self._facet_list = facets
        return facets

    def _facet_index(self) -> dict[VertexLabel, frozenset[int]]:
        index = self._vertex_to_facets
        if index is None:
            build: dict[VertexLabel, set[int]] = {}
            for i, f in enumerate(self.sorted_facets()):
                for v in f.vertices:
                    build.setdefault(v, set()).add(i)
            index = {v: frozenset(ids) for v, ids in build.items()}
            self._vertex_to_facets = index
        return index

    def facets_containing(self, simplex: Simplex) -> tuple[Simplex, ...]:
        """All facets that contain `simplex`."""
        if len(simplex) == 0:
            return self.sorted_facets()
        index = self._facet_index()
        ids: frozenset[int] | None = None
        for v in simplex.vertices:
            got = index.get(v)
            if got is None:
                return ()
            ids = got if ids is None else ids & got
            if not ids:
                return ()
        facets = self.sorted_facets()
        return tuple(facets[i] for i in sorted(ids))

    def __contains__(self, simplex) -> bool:
        s = as_simplex(simplex)
        if len(s) == 0:
            return True
        return bool(self.facets_containing(s))

    def faces(self) -> dict[int, frozenset[Simplex]]:
        """All nonempty faces grouped by dimension (cached)."""
        cache = self._faces_by_dim
        if cache is None:
            seen: set[Simplex] = set()
            for f in self.facets:
                verts = f.vertices
                for k in range(1, len(verts) + 1):
                    for comb in combinations(verts, k):
                        seen.add(Simplex(comb))
            grouped: dict[int, set[Simplex]] = {}
            for s in seen:
                grouped.setdefault(s.dim, set()).add(s)
            cache = {d: frozenset(g) for d, g in sorted(grouped.items())}
            self._faces_by_dim = cache
        return cache

    def all_faces(self) -> list[Simplex]:
        """All nonempty faces in canonical (dimension, lexicographic) order."""
        out: list[Simplex] = []
        for _, group in sorted(self.faces().items()):
            out.extend(sorted(group, key=Simplex.sort_key))
        return out

    def face_count(self) -> int:
        return sum(len(g) for g in self.faces().values())

    # -- invariants ----------------------------------------------------

    def validate(self) -> None:
        """Re-check structural invariants; raises StellarPairError on violation."""
        seen_tokens: set[tuple[str, ...]] = set()
        for f in self.facets:
            if len(f) == 0:
                raise StellarPairError("empty simplex stored as a facet")
            toks = f.tokens()
            if list(toks) != sorted(toks):
                raise StellarPairError(f"facet {f} is not sorted canonically")
            if len(set(toks)) != len(toks):
                raise StellarPairError(f"facet {f} carries duplicate vertices")
            if toks in seen_tokens:
                raise StellarPairError(f"facet {f} stored twice")
            seen_tokens.add(toks)
        facets = self.sorted_facets()
        for i, f in enumerate(facets):
            for j, g in enumerate(facets):
                if i != j and f.issubset(g):
                    raise StellarPairError(f"facet {f} is dominated by {g}")

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, SimplicialComplex):
            return self.facets == other.facets
        return NotImplemented

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        names = ", ".join(str(f) for f in self.sorted_facets())
        return f"SimplicialComplex[{names}]"


def from_facets(facets: Iterable[Iterable]) -> SimplicialComplex:
    """Build a complex from raw facet lists, rejecting malformed input.

    Duplicate labels inside one facet are an error; dominated facets are
    absorbed into the antichain.
    """
    simplices = []
    for raw in facets:
        if isinstance(raw, (str, int, VertexLabel)):
            raise MalformedInputError(f"facet must be a list of labels, got {raw!r}")
        labels = [vlabel(x) for x in raw]
        if not labels:
            raise MalformedInputError("facet must be a nonempty list of labels")
        if len(set(labels)) != len(labels):
            raise MalformedInputError(f"duplicate label within facet {[str(x) for x in labels]}")
        simplices.append(Simplex(tuple(sorted(labels))))
    return SimplicialComplex(simplices)


def star(cx: SimplicialComplex, simplex) -> SimplicialComplex:
    """Closed star: the simplicial closure of all faces containing `simplex`."""
    s = as_simplex(simplex)
    hits = cx.facets_containing(s)
    if not hits:
        raise AbsentFaceError(f"{s} is not a face of the complex")
    return SimplicialComplex._from_antichain(hits)


def link(cx: SimplicialComplex, simplex) -> SimplicialComplex:
    """Faces disjoint from `simplex` whose union with it is again a face."""
    s = as_simplex(simplex)
    hits = cx.facets_containing(s)
    if not hits:
        raise AbsentFaceError(f"{s} is not a face of the complex")
    return SimplicialComplex(f.difference(s.vertices) for f in hits)


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """Face counts by dimension, f_0 through f_dim."""
    faces = cx.faces()
    if not faces:
        return ()
    top = max(faces)
    return tuple(len(faces.get(d, ())) for d in range(top + 1))


def euler_characteristic(cx: SimplicialComplex) -> int:
    return sum(count if d % 2 == 0 else -count for d, count in enumerate(f_vector(cx)))


def is_subcomplex(sub: SimplicialComplex, ambient: SimplicialComplex) -> bool:
    """True iff every facet of `sub` is a face of `ambient`."""
    return all(f in ambient for f in sub.facets)


def induced_subcomplex(cx: SimplicialComplex, labels: Iterable) -> SimplicialComplex:
    """The subcomplex of all faces whose vertices lie in `labels`."""
    keep = {vlabel(x) for x in labels}
    restricted = []
    for f in cx.facets:
        common = [v for v in f.vertices if v in keep]
        if common:
            restricted.append(Simplex(tuple(common)))
    return SimplicialComplex(restricted)


def relabel_complex(cx: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    """Push the complex through an injective relabeling; labels absent from
    `mapping` are kept."""
    table = {vlabel(k): vlabel(v) for k, v in mapping.items()}
    image: dict[VertexLabel, VertexLabel] = {}
    for v in cx.vertex_set():
        image[v] = table.get(v, v)
    if len(set(image.values())) != len(image):
        raise MalformedInputError("relabeling is not injective on the complex's vertices")
    return SimplicialComplex._from_antichain(
        Simplex(tuple(sorted(image[v] for v in f.vertices))) for f in cx.facets
    )


def is_pseudomanifold(cx: SimplicialComplex, d: int) -> bool:
    """Diagnostic: pure d-dimensional, ridges in at most two facets, and
    strongly connected through ridges."""
    facets = cx.sorted_facets()
    if not facets or d < 0:
        return False
    if any(f.dim != d for f in facets):
        return False
    if d == 0:
        return len(facets) <= 2
    ridge_to_facets: dict[Simplex, list[int]] = {}
    for i, f in enumerate(facets):
        for r in f.boundary():
            ridge_to_facets.setdefault(r, []).append(i)
    if any(len(ids) > 2 for ids in ridge_to_facets.values()):
        return False
    # dual-graph connectivity through shared ridges
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(facets))}
    for ids in ridge_to_facets.values():
        if len(ids) == 2:
            a, b = ids
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(facets)

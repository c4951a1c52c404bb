"""Induced and strongly induced subcomplex predicates, with witnesses.

Every negative verdict carries a re-checkable counterexample; ties are
broken toward the canonically least simplex (dimension first, then
lexicographic) so the verdicts are reproducible.

The strong-inducedness scan exploits two facts: the verdict for a face
depends only on the set of facets containing it (memoized per facet
support), and the subcomplex faces inside one ambient facet depend only
on the facet's trace on the subcomplex's vertices.  The hot path is pure
integer bitmask arithmetic; simplices are only materialized when a
witness has to be reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Simplex, SimplicialComplex, is_subcomplex
from .errors import NotASubcomplexError
from .labels import VertexLabel

INDUCED = "induced"
NOT_INDUCED = "not_induced"
STRONGLY_INDUCED = "strongly_induced"
NOT_STRONGLY_INDUCED = "not_strongly_induced"


@dataclass(frozen=True)
class InducednessWitness:
    """Outcome of an inducedness check.

    For `not_induced`, `offending_simplex` is a face of the ambient complex
    with all vertices in the subcomplex that the subcomplex misses.  For
    `not_strongly_induced`, `sigma` is an ambient face outside the
    subcomplex whose closed star meets the subcomplex in
    `intersection_faces` (two or more maximal faces).
    """

    verdict: str
    offending_simplex: Simplex | None = None
    sigma: Simplex | None = None
    intersection_faces: tuple[Simplex, ...] = ()

    @property
    def holds(self) -> bool:
        return self.verdict in (INDUCED, STRONGLY_INDUCED)

    @property
    def at_least_induced(self) -> bool:
        return self.verdict in (INDUCED, STRONGLY_INDUCED)

    def __str__(self):
        if self.verdict == NOT_INDUCED:
            return f"{self.verdict}({self.offending_simplex})"
        if self.verdict == NOT_STRONGLY_INDUCED:
            faces = ", ".join(str(f) for f in self.intersection_faces)
            return f"{self.verdict}(sigma={self.sigma}, intersection=[{faces}])"
        return self.verdict


def _require_subcomplex(sub: SimplicialComplex, ambient: SimplicialComplex) -> None:
    if not is_subcomplex(sub, ambient):
        bad = next(f for f in sub.sorted_facets() if f not in ambient)
        raise NotASubcomplexError(f"facet {bad} of the subcomplex is not a face of the ambient complex")


def missing_simplices(cx: SimplicialComplex, max_dim: int | None = None) -> set[Simplex]:
    """All minimal non-faces whose full boundary lies in the complex.

    Candidates never exceed dimension dim(cx)+1, since every proper face of a
    missing simplex must be present; `max_dim` can lower that bound.
    """
    top_card = cx.dim + 2
    if max_dim is not None:
        top_card = min(top_card, max_dim + 1)
    verts = cx.vertices()
    faces = cx.faces()
    found: set[Simplex] = set()
    for card in range(2, top_card + 1):
        shells = faces.get(card - 2, ())
        for shell in shells:
            top = shell.vertices[-1]
            for w in verts:
                if w <= top:
                    continue
                candidate = Simplex(shell.vertices + (w,))
                if candidate in cx:
                    continue
                if all(b in cx for b in candidate.boundary()):
                    found.add(candidate)
    return found


def is_induced(sub: SimplicialComplex, ambient: SimplicialComplex) -> InducednessWitness:
    """Is every ambient face with all vertices in `sub` a face of `sub`?"""
    _require_subcomplex(sub, ambient)
    keep = sub.vertex_set()
    trace_ok: dict[tuple[VertexLabel, ...], bool] = {}
    offended = False
    for f in ambient.facets:
        common = tuple(v for v in f.vertices if v in keep)
        if not common:
            continue
        ok = trace_ok.get(common)
        if ok is None:
            ok = Simplex(common) in sub
            trace_ok[common] = ok
        if not ok:
            offended = True
            break
    if not offended:
        return InducednessWitness(INDUCED)
    offenders = [
        s
        for s in ambient.all_faces()
        if all(v in keep for v in s.vertices) and s not in sub
    ]
    return InducednessWitness(NOT_INDUCED, offending_simplex=min(offenders, key=Simplex.sort_key))


class _StrongScan:
    """Shared machinery for the strong-inducedness fast scan and witness pass."""

    def __init__(self, sub: SimplicialComplex, ambient: SimplicialComplex):
        self.sub = sub
        self.facets = ambient.sorted_facets()
        self.gamma_verts = sub.vertex_set()
        self.gamma_facet_sets = [f._vset for f in sub.facets]
        self.vmask: dict[VertexLabel, int] = {}
        for i, f in enumerate(self.facets):
            bit = 1 << i
            for v in f.vertices:
                self.vmask[v] = self.vmask.get(v, 0) | bit
        # maximal sub-faces within a facet, keyed by the facet's vertex trace on sub
        self._trace_pieces: dict[frozenset, tuple[frozenset, ...]] = {}
        self._pieces_by_facet: list[tuple[frozenset, ...]] = [
            self._pieces(f) for f in self.facets
        ]
        self._support_maximal: dict[int, tuple[frozenset, ...]] = {}

    def _pieces(self, facet: Simplex) -> tuple[frozenset, ...]:
        trace = frozenset(v for v in facet.vertices if v in self.gamma_verts)
        if not trace:
            return ()
        got = self._trace_pieces.get(trace)
        if got is None:
            cuts = {g & trace for g in self.gamma_facet_sets}
            cuts.discard(frozenset())
            got = tuple(c for c in cuts if not any(c is not d and c <= d for d in cuts))
            self._trace_pieces[trace] = got
        return got

    def maximal_for(self, support: int) -> tuple[frozenset, ...]:
        got = self._support_maximal.get(support)
        if got is None:
            pieces: set[frozenset] = set()
            s = support
            while s:
                low = s & -s
                pieces.update(self._pieces_by_facet[low.bit_length() - 1])
                s ^= low
            got = tuple(p for p in pieces if not any(p is not q and p < q for q in pieces))
            self._support_maximal[support] = got
        return got

    def has_violation(self) -> bool:
        """Integer-only scan over every facet's subsets."""
        for i, facet in enumerate(self.facets):
            verts = facet.vertices
            m = len(verts)
            masks = [self.vmask[v] for v in verts]
            pieces = self._pieces_by_facet[i]
            piece_bits = [
                sum(1 << j for j, v in enumerate(verts) if v in p) for p in pieces
            ]
            size = 1 << m
            sup = [0] * size
            for t in range(1, size):
                low = t & -t
                j = low.bit_length() - 1
                rest = t ^ low
                sup_t = masks[j] if rest == 0 else sup[rest] & masks[j]
                sup[t] = sup_t
                if len(self.maximal_for(sup_t)) > 1:
                    # the face is a violation unless it lies in the subcomplex
                    if not any(t & ~pb == 0 for pb in piece_bits):
                        return True
        return False

    def witness(self) -> InducednessWitness:
        """Locate the (dimension, lexicographic)-least violating face."""
        ambient_faces: list[Simplex] = []
        seen: set[Simplex] = set()
        for facet in self.facets:
            for s in facet.subfaces():
                if s not in seen:
                    seen.add(s)
                    ambient_faces.append(s)
        ambient_faces.sort(key=Simplex.sort_key)
        for sigma in ambient_faces:
            support = None
            for v in sigma.vertices:
                m = self.vmask[v]
                support = m if support is None else support & m
            maximal = self.maximal_for(support)
            if len(maximal) <= 1 or sigma in self.sub:
                continue
            faces = tuple(
                sorted((Simplex(tuple(sorted(p))) for p in maximal), key=Simplex.sort_key)
            )
            return InducednessWitness(NOT_STRONGLY_INDUCED, sigma=sigma, intersection_faces=faces)
        raise AssertionError("violation vanished between scan and witness pass")


def is_strongly_induced(sub: SimplicialComplex, ambient: SimplicialComplex) -> InducednessWitness:
    """For every ambient face sigma outside `sub`, does `sub` meet the closed
    star of sigma in at most a single simplex (possibly the empty one)?"""
    _require_subcomplex(sub, ambient)
    scan = _StrongScan(sub, ambient)
    if not scan.has_violation():
        return InducednessWitness(STRONGLY_INDUCED)
    return scan.witness()


def classify_pair(sub: SimplicialComplex, ambient: SimplicialComplex) -> InducednessWitness:
    """Most precise verdict for a subcomplex pair: strongly induced, induced,
    or not induced (with witness)."""
    verdict = is_induced(sub, ambient)
    if verdict.verdict == NOT_INDUCED:
        return verdict
    strong = is_strongly_induced(sub, ambient)
    if strong.verdict == STRONGLY_INDUCED:
        return strong
    return verdict

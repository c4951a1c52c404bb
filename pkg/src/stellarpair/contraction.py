"""Edge contraction: validity testing and execution.

An edge is valid when no missing simplex contains it; contracting a valid
edge is label substitution plus deduplication, and only then is the
quotient a simplicial complex.  Contracting an invalid edge is a hard
error carrying the blocking missing simplices.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import Simplex, SimplicialComplex, as_simplex, link
from .errors import AbsentFaceError, DomainError, InvalidEdgeError, MalformedInputError
from .labels import VertexLabel, vlabel


def _check_edge(cx: SimplicialComplex, edge) -> Simplex:
    e = as_simplex(edge)
    if e.dim != 1:
        raise DomainError(f"expected an edge, got {e}")
    if e not in cx:
        raise AbsentFaceError(f"{e} is not an edge of the complex")
    return e


def _blocker_candidates(cx: SimplicialComplex, e: Simplex):
    """Vertex sets containing e whose pairs are all edges of cx."""
    u, v = e.vertices
    common = [
        w
        for w in cx.vertices()
        if w not in (u, v) and Simplex(tuple(sorted((u, w)))) in cx and Simplex(tuple(sorted((v, w)))) in cx
    ]
    top_extra = cx.dim  # a missing simplex has dimension <= dim+1, so <= dim extra vertices beyond e
    for size in range(1, max(top_extra, 0) + 1):
        for extra in combinations(common, size):
            yield Simplex(tuple(sorted(e._vset | set(extra))))


def blocking_missing_simplices(cx: SimplicialComplex, edge) -> tuple[Simplex, ...]:
    """All missing simplices of the complex that contain the given edge."""
    e = _check_edge(cx, edge)
    blockers = [
        s
        for s in _blocker_candidates(cx, e)
        if s not in cx and all(b in cx for b in s.boundary())
    ]
    return tuple(sorted(blockers, key=Simplex.sort_key))


def is_valid_edge(cx: SimplicialComplex, edge) -> bool:
    """True iff no missing simplex of the complex contains the edge."""
    e = _check_edge(cx, edge)
    for s in _blocker_candidates(cx, e):
        if s not in cx and all(b in cx for b in s.boundary()):
            return False
    return True


def link_condition(cx: SimplicialComplex, edge) -> bool:
    """Classical diagnostic: lk(u) intersect lk(v) equals lk(uv).

    Equivalent to `is_valid_edge`; kept as an independent oracle.
    """
    e = _check_edge(cx, edge)
    u, v = e.vertices
    faces_u = {s for group in link(cx, [u]).faces().values() for s in group}
    faces_v = {s for group in link(cx, [v]).faces().values() for s in group}
    faces_e = {s for group in link(cx, e).faces().values() for s in group}
    return faces_u & faces_v == faces_e


def contract_edge(cx: SimplicialComplex, edge, survivor=None) -> SimplicialComplex:
    """Contract a valid edge: the non-surviving label is replaced by the
    survivor everywhere, degenerate images collapse, duplicates merge."""
    e = _check_edge(cx, edge)
    blockers = blocking_missing_simplices(cx, e)
    if blockers:
        raise InvalidEdgeError(e, blockers)
    u, v = e.vertices
    keep: VertexLabel = u if survivor is None else vlabel(survivor)
    if keep not in (u, v):
        raise MalformedInputError(f"survivor {keep} is not an endpoint of {e}")
    lose = v if keep == u else u
    new_facets = []
    for f in cx.facets:
        if lose in f._vset:
            new_facets.append(Simplex(tuple(sorted(f._vset - {lose} | {keep}))))
        else:
            new_facets.append(f)
    return SimplicialComplex(new_facets)

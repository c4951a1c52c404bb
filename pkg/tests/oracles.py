"""Independent oracles the tests check the library against.

These deliberately recompute results from the definitions (face
enumeration, cone construction, iterated stellar schedules) rather than
reusing the implementation's formulas.
"""

from __future__ import annotations

from itertools import combinations

from stellarpair import (
    Simplex,
    SimplicialComplex,
    as_simplex,
    next_round,
    stellar_subdivide,
)
from stellarpair.labels import VertexLabel


def all_faces_brute(cx: SimplicialComplex) -> set[Simplex]:
    """Every nonempty subset of every facet."""
    out: set[Simplex] = set()
    for f in cx.facets:
        for k in range(1, len(f.vertices) + 1):
            for comb in combinations(f.vertices, k):
                out.add(Simplex(tuple(comb)))
    return out


def complex_from_faces(faces) -> SimplicialComplex:
    return SimplicialComplex(list(faces))


def star_by_enumeration(cx: SimplicialComplex, simplex) -> SimplicialComplex:
    """Closed star straight from the definition: faces containing sigma,
    closed downward."""
    s = as_simplex(simplex)
    containing = [f for f in all_faces_brute(cx) if s.issubset(f)]
    closure: set[Simplex] = set()
    for f in containing:
        for k in range(1, len(f.vertices) + 1):
            for comb in combinations(f.vertices, k):
                closure.add(Simplex(tuple(comb)))
    return complex_from_faces(closure)


def link_by_enumeration(cx: SimplicialComplex, simplex) -> SimplicialComplex:
    s = as_simplex(simplex)
    faces = all_faces_brute(cx)
    hits = [t for t in faces if not (t._vset & s._vset) and t.union(s) in faces]
    return complex_from_faces(hits)


def stellar_by_definition(cx: SimplicialComplex, simplex, new_label) -> SimplicialComplex:
    """Remove the open star of sigma, glue in the cone from the new vertex
    over boundary(sigma) * link(sigma)."""
    s = as_simplex(simplex)
    v = VertexLabel.of(new_label)
    faces = all_faces_brute(cx)
    kept = [f for f in faces if not s.issubset(f)]
    lk = [t for t in faces if not (t._vset & s._vset) and t.union(s) in faces]
    cone = []
    alphas = [Simplex(())] + [
        Simplex(tuple(comb))
        for k in range(1, len(s.vertices))
        for comb in combinations(s.vertices, k)
    ]
    betas = [Simplex(())] + lk
    for alpha in alphas:
        for beta in betas:
            cone.append(Simplex(tuple(sorted(alpha._vset | beta._vset | {v}))))
    return complex_from_faces(kept + cone)


def schedule_biased(sub: SimplicialComplex, ambient: SimplicialComplex, rnd: int | None = None) -> SimplicialComplex:
    """Biased derived subdivision by its schedule: iterated stellar
    subdivisions at every face outside `sub` of dimension >= 1, larger
    faces first, lexicographic within a dimension."""
    if rnd is None:
        rnd = next_round(ambient.vertex_set())
    targets = [
        f
        for group in ambient.faces().values()
        for f in group
        if f.dim >= 1 and f not in sub
    ]
    targets.sort(key=lambda f: (-len(f.vertices), f.tokens()))
    out = ambient
    for f in targets:
        out = stellar_subdivide(out, f, VertexLabel.barycenter((v.token for v in f.vertices), rnd))
    return out


def schedule_derived(cx: SimplicialComplex, rnd: int | None = None) -> SimplicialComplex:
    """Derived subdivision as a stellar schedule (empty subcomplex bias)."""
    return schedule_biased(SimplicialComplex([]), cx, rnd)


def naive_missing_simplices(cx: SimplicialComplex) -> set[Simplex]:
    """Missing simplices by raw subset enumeration over the vertex set."""
    verts = cx.vertices()
    faces = all_faces_brute(cx)
    out: set[Simplex] = set()
    for card in range(2, cx.dim + 3):
        for combo in combinations(verts, card):
            s = Simplex(tuple(combo))
            if s in faces:
                continue
            if all(b in faces for b in s.boundary()):
                out.add(s)
    return out


def naive_is_induced(sub: SimplicialComplex, ambient: SimplicialComplex) -> bool:
    keep = sub.vertex_set()
    sub_faces = all_faces_brute(sub)
    for f in all_faces_brute(ambient):
        if f._vset <= keep and f not in sub_faces:
            return False
    return True


def naive_is_strongly_induced(sub: SimplicialComplex, ambient: SimplicialComplex) -> bool:
    """Definition verbatim: for every ambient face outside `sub`, the faces
    of `sub` inside the closed star form at most one maximal simplex."""
    sub_faces = all_faces_brute(sub)
    for sigma in all_faces_brute(ambient):
        if sigma in sub_faces:
            continue
        star = all_faces_brute(star_by_enumeration(ambient, sigma))
        common = [f for f in star if f in sub_faces]
        maximal = [f for f in common if not any(f is not g and f.issubset(g) for g in common)]
        if len(maximal) > 1:
            return False
    return True

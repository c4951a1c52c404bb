from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from stellarpair import (
    EMPTY_SIMPLEX,
    Simplex,
    SimplicialComplex,
    as_simplex,
    euler_characteristic,
    f_vector,
    from_facets,
    is_pseudomanifold,
    is_subcomplex,
    isomorphism,
    link,
    relabel_complex,
    star,
    vlabel,
)
from stellarpair.errors import AbsentFaceError, MalformedInputError, ResourceLimitError


# -- strategies ---------------------------------------------------------

LABELS = [str(i) for i in range(1, 7)]

facet_lists = st.lists(
    st.sets(st.sampled_from(LABELS), min_size=1, max_size=4),
    min_size=1,
    max_size=8,
)


def build(facets) -> SimplicialComplex:
    return from_facets([sorted(f) for f in facets])


# -- constructors -------------------------------------------------------

def test_from_facets_path():
    cx = from_facets([[1, 2], [2, 3]])
    assert {f.tokens() for f in cx.facets} == {("1", "2"), ("2", "3")}
    faces = {s.tokens() for group in cx.faces().values() for s in group}
    assert faces == {("1",), ("2",), ("3",), ("1", "2"), ("2", "3")}


def test_from_facets_absorbs_dominated():
    cx = from_facets([[1, 2, 3], [1, 2]])
    assert {f.tokens() for f in cx.facets} == {("1", "2", "3")}


def test_from_facets_rejects_duplicate_label():
    with pytest.raises(MalformedInputError):
        from_facets([[1, 1, 2]])


def test_from_facets_rejects_empty_facet():
    with pytest.raises(MalformedInputError):
        from_facets([[]])


def test_empty_simplex_is_internal_only():
    assert EMPTY_SIMPLEX.dim == -1
    assert len(EMPTY_SIMPLEX) == 0
    cx = from_facets([[1]])
    assert EMPTY_SIMPLEX in cx  # contained everywhere, never stored


def test_equality_is_by_facet_set():
    a = from_facets([[1, 2], [2, 3]])
    b = from_facets([[2, 3], [1, 2], [2]])
    assert a == b and hash(a) == hash(b)
    assert a != from_facets([[1, 2]])


# -- star / link --------------------------------------------------------

def test_star_simplex_in_every_facet():
    cx = from_facets([[1, 2, 3], [1, 3, 4]])
    assert star(cx, [1, 3]) == cx


def test_star_vertex_on_path():
    cx = from_facets([[1, 2], [2, 3], [3, 4]])
    assert star(cx, [1]) == from_facets([[1, 2]])


def test_star_derived_example_matches_enumeration_oracle():
    cx = from_facets([[1, 2, 3], [1, 3, 4]])
    expected = oracles.star_by_enumeration(cx, [2])
    assert expected == from_facets([[1, 2, 3]])  # frozen from the oracle
    assert star(cx, [2]) == expected


def test_star_absent_face():
    with pytest.raises(AbsentFaceError):
        star(from_facets([[1, 2]]), [3])


def test_link_examples(tetra_boundary):
    assert link(from_facets([[1, 2, 3], [1, 3, 4]]), [1, 3]) == from_facets([[2], [4]])
    assert link(from_facets([[1, 2], [2, 3]]), [2]) == from_facets([[1], [3]])
    expected = oracles.link_by_enumeration(tetra_boundary, [1, 2])
    assert expected == from_facets([[3], [4]])  # frozen from the oracle
    assert link(tetra_boundary, [1, 2]) == expected


@given(facet_lists)
@settings(max_examples=60)
def test_star_link_relationship(facets):
    cx = build(facets)
    for group in cx.faces().values():
        for s in group:
            st_ = star(cx, s)
            assert is_subcomplex(st_, cx)
            assert s in st_
            lk = link(cx, s)
            expected = {
                t
                for g in st_.faces().values()
                for t in g
                if not (t._vset & s._vset)
            }
            got = {t for g in lk.faces().values() for t in g}
            assert got == expected


# -- f-vector / Euler characteristic -------------------------------------

def test_f_vector_examples(triangle, tetra_boundary, four_cycle):
    assert f_vector(triangle) == (3, 3, 1)
    assert euler_characteristic(triangle) == 1
    assert f_vector(tetra_boundary) == (4, 6, 4)
    assert euler_characteristic(tetra_boundary) == 2
    assert f_vector(four_cycle) == (4, 4)
    assert euler_characteristic(four_cycle) == 0


def test_f_vector_empty_and_points():
    assert f_vector(SimplicialComplex([])) == ()
    assert euler_characteristic(SimplicialComplex([])) == 0
    assert f_vector(from_facets([[1], [2]])) == (2,)


# -- subcomplex ----------------------------------------------------------

def test_is_subcomplex_examples(four_cycle):
    assert is_subcomplex(from_facets([[1, 2]]), from_facets([[1, 2, 3]]))
    assert not is_subcomplex(from_facets([[1, 4]]), from_facets([[1, 2, 3]]))
    ambient = from_facets([[1, 2], [2, 3], [3, 4], [1, 4], [2, 4]])
    assert is_subcomplex(four_cycle, ambient)


# -- isomorphism ----------------------------------------------------------

def test_isomorphism_paths():
    a = from_facets([[1, 2], [2, 3]])
    b = from_facets([["a", "b"], ["b", "c"]])
    iso = isomorphism(a, b)
    assert iso is not None
    assert iso[vlabel("2")] == vlabel("b")  # the middle vertex must map to the middle


def test_isomorphism_connected_vs_disconnected():
    assert isomorphism(from_facets([[1, 2], [2, 3]]), from_facets([["a", "b"], ["c", "d"]])) is None


def test_isomorphism_tetra_vs_octahedron(tetra_boundary, octahedron_boundary):
    assert f_vector(tetra_boundary) == (4, 6, 4)
    assert f_vector(octahedron_boundary) == (6, 12, 8)
    assert isomorphism(tetra_boundary, octahedron_boundary) is None


def test_isomorphism_size_guard():
    big = from_facets([[i] for i in range(1, 30)])
    with pytest.raises(ResourceLimitError):
        isomorphism(big, big, guard=12)


@given(facet_lists, st.permutations(LABELS))
@settings(max_examples=60)
def test_isomorphism_pushes_facets_through(facets, shuffled):
    cx = build(facets)
    mapping = {old: f"w{new}" for old, new in zip(LABELS, shuffled)}
    relabeled = relabel_complex(cx, mapping)
    assert f_vector(relabeled) == f_vector(cx)
    assert euler_characteristic(relabeled) == euler_characteristic(cx)
    iso = isomorphism(cx, relabeled)
    assert iso is not None
    pushed = frozenset(
        Simplex(tuple(sorted(iso[v] for v in f.vertices))) for f in cx.facets
    )
    assert pushed == relabeled.facets
    # reflexivity and symmetry
    assert isomorphism(cx, cx) is not None
    assert (isomorphism(relabeled, cx) is None) == (iso is None)


def test_isomorphism_highly_symmetric(octahedron_boundary):
    rotated = relabel_complex(octahedron_boundary, {"1": "2", "2": "6", "6": "5", "5": "1"})
    assert isomorphism(octahedron_boundary, rotated) is not None


# -- pseudomanifold --------------------------------------------------------

def test_pseudomanifold_examples(tetra_boundary):
    assert is_pseudomanifold(tetra_boundary, 2)
    assert not is_pseudomanifold(from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]]), 2)
    assert not is_pseudomanifold(from_facets([[1, 2, 3], [3, 4, 5]]), 2)


def test_pseudomanifold_edge_cases(four_cycle):
    assert is_pseudomanifold(four_cycle, 1)
    assert is_pseudomanifold(from_facets([[1, 2], [2, 3]]), 1)  # boundary allowed
    assert not is_pseudomanifold(four_cycle, 2)  # wrong dimension
    assert not is_pseudomanifold(SimplicialComplex([]), 2)
    assert is_pseudomanifold(from_facets([[1], [2]]), 0)
    assert not is_pseudomanifold(from_facets([[1], [2], [3]]), 0)


def test_pseudomanifold_strong_connectivity_oracle():
    # {123,345} is pure with ridge degrees <= 2 but its dual graph is disconnected:
    # the two triangles share only the vertex 3, never a ridge.
    cx = from_facets([[1, 2, 3], [3, 4, 5]])
    ridges = {}
    facets = cx.sorted_facets()
    for i, f in enumerate(facets):
        for r in f.boundary():
            ridges.setdefault(r, []).append(i)
    assert all(len(ids) <= 2 for ids in ridges.values())
    assert not any(len(ids) == 2 for ids in ridges.values())


# -- invariants -------------------------------------------------------------

@given(facet_lists)
@settings(max_examples=60)
def test_constructor_invariants_hold(facets):
    from stellarpair import set_debug_validation

    old = set_debug_validation(True)
    try:
        cx = build(facets)
    finally:
        set_debug_validation(old)
    cx.validate()
    sorted_facets = cx.sorted_facets()
    for i, f in enumerate(sorted_facets):
        for j, g in enumerate(sorted_facets):
            if i != j:
                assert not f.issubset(g)
    # downward closure: every subset of a face is a face
    for group in cx.faces().values():
        for s in group:
            for b in s.boundary():
                if len(b) > 0:
                    assert b in cx


def test_face_cache_is_concurrency_safe():
    from concurrent.futures import ThreadPoolExecutor

    cx = from_facets([[1, 2, 3, 4], [3, 4, 5, 6], [1, 5, 6]])
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: f_vector(cx), range(32)))
    assert len(set(results)) == 1


def test_as_simplex_accepts_labels_and_simplices():
    s = as_simplex([3, 1])
    assert s.tokens() == ("1", "3")
    assert as_simplex(s) is s
    assert as_simplex("7").tokens() == ("7",)

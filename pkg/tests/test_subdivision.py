from __future__ import annotations

import pathlib

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from stellarpair import (
    SimplicialComplex,
    as_simplex,
    biased_derived,
    derived_subdivision,
    edge_subdivide,
    euler_characteristic,
    f_vector,
    from_facets,
    induced_subcomplex,
    is_pseudomanifold,
    is_subcomplex,
    isomorphism,
    link,
    next_round,
    stellar_subdivide,
    vlabel,
)
from stellarpair.errors import AbsentFaceError, DomainError, NamingError
from stellarpair.io import ComplexDocument, random_complex, random_subcomplex_pair, serialize_complex_document

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


# -- stellar ---------------------------------------------------------------

def test_stellar_at_top_simplex(triangle):
    out = stellar_subdivide(triangle, [1, 2, 3], "v")
    assert out == from_facets([[1, 2, "v"], [1, 3, "v"], [2, 3, "v"]])


def test_stellar_at_shared_edge_matches_definition_oracle():
    cx = from_facets([[1, 2, 3], [1, 3, 4]])
    expected = oracles.stellar_by_definition(cx, [1, 3], "v")
    assert expected == from_facets([[1, 2, "v"], [2, 3, "v"], [1, 4, "v"], [3, 4, "v"]])
    assert stellar_subdivide(cx, [1, 3], "v") == expected


def test_stellar_midpoint_on_path():
    out = stellar_subdivide(from_facets([[1, 2], [2, 3]]), [2, 3], "v")
    assert out == from_facets([[1, 2], [2, "v"], [3, "v"]])


def test_stellar_errors(triangle):
    with pytest.raises(AbsentFaceError):
        stellar_subdivide(triangle, [1, 4], "v")
    with pytest.raises(NamingError):
        stellar_subdivide(triangle, [1, 2], "3")
    with pytest.raises(DomainError):
        stellar_subdivide(triangle, [1], "v")


@given(st.integers(0, 300))
@settings(max_examples=50, deadline=None)
def test_stellar_agrees_with_definition_oracle(seed):
    cx = random_complex(6, 3, 0.5, seed)
    edges = sorted(cx.faces().get(1, ()))
    if not edges:
        return
    sigma = edges[seed % len(edges)]
    got = stellar_subdivide(cx, sigma, "w")
    assert got == oracles.stellar_by_definition(cx, sigma, "w")
    # sigma is gone; the new vertex joined with boundary(sigma) * link(sigma) survives
    assert sigma not in got
    w = vlabel("w")
    for b in sigma.boundary():
        for lk_face in [f for g in link(cx, sigma).faces().values() for f in g]:
            joined = as_simplex({*b.vertices, *lk_face.vertices, w})
            assert joined in got


# -- edge subdivision ---------------------------------------------------------

def test_edge_subdivide_segment():
    assert edge_subdivide(from_facets([[1, 2]]), [1, 2], "v") == from_facets([[1, "v"], [2, "v"]])


def test_edge_subdivide_triangle(triangle):
    assert edge_subdivide(triangle, [1, 2], "v") == from_facets([[1, 3, "v"], [2, 3, "v"]])


def test_edge_subdivide_tetra_boundary_counts(tetra_boundary):
    out = edge_subdivide(tetra_boundary, [1, 2], "v")
    assert f_vector(out) == (5, 9, 6)
    assert euler_characteristic(out) == 2


def test_edge_subdivide_rejects_non_edge(triangle):
    with pytest.raises(DomainError):
        edge_subdivide(triangle, [1, 2, 3], "v")


# -- derived -------------------------------------------------------------------

def test_derived_segment():
    out, record = derived_subdivision(from_facets([[1, 2]]))
    assert out == from_facets([[1, "b{1,2}@0"], [2, "b{1,2}@0"]])
    assert record.round == 0
    assert [s.tokens() for s in record.subdivided_faces] == [("1", "2")]


def test_derived_triangle_chain_counts(triangle):
    out, _ = derived_subdivision(triangle)
    assert f_vector(out)[0] == 7
    assert len(out.facets) == 6
    assert all(f.dim == 2 for f in out.facets)


@given(st.integers(0, 400))
@settings(max_examples=60, deadline=None)
def test_derived_vertex_count_is_face_count(seed):
    cx = random_complex(6, 3, 0.5, seed)
    out, record = derived_subdivision(cx)
    assert f_vector(out)[0] == cx.face_count()
    # one fresh label per subdivided face, injectively
    assert len(set(record.new_labels.values())) == len(record.new_labels)
    assert all(f.dim >= 1 for f in record.new_labels)
    assert set(record.subdivided_faces) == set(record.new_labels)


@given(st.integers(0, 200))
@settings(max_examples=25, deadline=None)
def test_derived_equals_stellar_schedule(seed):
    cx = random_complex(5, 2, 0.5, seed)
    direct, _ = derived_subdivision(cx)
    assert direct == oracles.schedule_derived(cx)


def test_derived_round_increments():
    cx = from_facets([[1, 2]])
    once, rec1 = derived_subdivision(cx)
    twice, rec2 = derived_subdivision(once)
    assert rec1.round == 0 and rec2.round == 1
    assert twice.num_vertices() == 3 + 2  # 3 vertices + 2 new edge barycenters


# -- biased ---------------------------------------------------------------------

def test_biased_edge_in_triangle_exact_facets():
    gamma = from_facets([[1, 2]])
    out, record = biased_derived(gamma, from_facets([[1, 2, 3]]))
    assert out == from_facets(
        [
            [1, 2, "b{1,2,3}@0"],
            [1, "b{1,3}@0", "b{1,2,3}@0"],
            [3, "b{1,3}@0", "b{1,2,3}@0"],
            [2, "b{2,3}@0", "b{1,2,3}@0"],
            [3, "b{2,3}@0", "b{1,2,3}@0"],
        ]
    )
    assert {s.tokens() for s in record.subdivided_faces} == {("1", "3"), ("2", "3"), ("1", "2", "3")}
    assert is_subcomplex(gamma, out)


def test_biased_edge_in_triangle_serialization_matches_fixture():
    gamma = from_facets([[1, 2]])
    out, _ = biased_derived(gamma, from_facets([[1, 2, 3]]))
    text = serialize_complex_document(ComplexDocument("biased-edge-in-triangle", out))
    assert text == (FIXTURES / "biased_edge_in_triangle.json").read_text()


def test_biased_identity_when_equal(tetra_boundary):
    out, record = biased_derived(tetra_boundary, tetra_boundary)
    assert out == tetra_boundary
    assert record.subdivided_faces == ()


def test_biased_with_empty_sub_is_derived(tetra_boundary):
    out, _ = biased_derived(SimplicialComplex([]), tetra_boundary)
    derived, _ = derived_subdivision(tetra_boundary)
    assert out == derived
    assert isomorphism(out, derived) is not None


@given(st.integers(0, 200))
@settings(max_examples=25, deadline=None)
def test_biased_equals_stellar_schedule(seed):
    ambient = random_complex(5, 2, 0.5, seed)
    sub = induced_subcomplex(ambient, ["1", "2", "3"])
    direct, _ = biased_derived(sub, ambient)
    assert direct == oracles.schedule_biased(sub, ambient)


@given(st.integers(0, 300))
@settings(max_examples=40, deadline=None)
def test_biased_keeps_sub_untouched(seed):
    sub, ambient = random_subcomplex_pair(6, 2, 0.5, seed)
    out, _ = biased_derived(sub, ambient)
    assert is_subcomplex(sub, out)


# -- conservation -----------------------------------------------------------------

@given(st.integers(0, 400))
@settings(max_examples=50, deadline=None)
def test_subdivisions_preserve_euler(seed):
    cx = random_complex(6, 3, 0.45, seed)
    chi = euler_characteristic(cx)
    d, _ = derived_subdivision(cx)
    assert euler_characteristic(d) == chi
    sub, ambient = random_subcomplex_pair(6, 3, 0.45, seed)
    b, _ = biased_derived(sub, ambient)
    assert euler_characteristic(b) == euler_characteristic(ambient)
    edges = sorted(cx.faces().get(1, ()))
    if edges:
        s = stellar_subdivide(cx, edges[seed % len(edges)], "w")
        assert euler_characteristic(s) == chi


def test_subdivisions_preserve_pseudomanifold(tetra_boundary, octahedron_boundary, four_cycle):
    for cx, d in ((tetra_boundary, 2), (octahedron_boundary, 2), (four_cycle, 1)):
        assert is_pseudomanifold(cx, d)
        derived, _ = derived_subdivision(cx)
        assert is_pseudomanifold(derived, d)
        edges = sorted(cx.faces()[1])
        assert is_pseudomanifold(edge_subdivide(cx, edges[0], "w"), d)
        if d == 2:
            tri = sorted(cx.faces()[2])[0]
            assert is_pseudomanifold(stellar_subdivide(cx, tri, "w"), d)
        sub = induced_subcomplex(cx, ["1", "2"])
        biased, _ = biased_derived(sub, cx)
        assert is_pseudomanifold(biased, d)


# -- derived compatibility (footnote) ------------------------------------------------

@given(st.integers(0, 400))
@settings(max_examples=50, deadline=None)
def test_derived_restriction_compatibility(seed):
    sub, ambient = random_subcomplex_pair(6, 2, 0.5, seed)
    rnd = next_round(ambient.vertex_set())
    dg, _ = derived_subdivision(sub, round=rnd)
    dd, _ = derived_subdivision(ambient, round=rnd)
    restricted = induced_subcomplex(dd, dg.vertex_set())
    assert restricted == dg

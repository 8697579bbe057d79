from __future__ import annotations

import json

import pytest

from skein_tori.surface import (TriangulationError, attach_triangles, build_mu_triangulation,
                                build_surface, builtin, load_triangulation)
from skein_tori.quiver import small_vertices

from conftest import ZOO, ZOO_SURFACES, tri


@pytest.mark.parametrize("name", ZOO)
def test_builtin_counts(name):
    T = tri(name)
    S = T.surface
    assert len(T.faces) == S.num_faces
    assert len(T.edge_ids) - len(T.faces) == S.r
    assert [len(c) for c in T.boundary] == list(S.punctures)


@pytest.mark.parametrize("name", ZOO)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_vertex_counts(name, n):
    T = tri(name)
    S = T.surface
    vs = small_vertices(T, n)
    assert len(vs.vbar) == S.vbar_size(n)
    vss = small_vertices(attach_triangles(T), n)
    assert len(vss.v_x) == len(vss.v_a) == S.v_size(n)
    assert len(vss.w_set) == len(vss.u_set) == S.w_size(n)


@pytest.mark.parametrize("g,punctures", ZOO_SURFACES)
def test_mu_triangulation_matches_surface(g, punctures):
    X = build_mu_triangulation(build_surface(g, punctures))
    assert X.full.surface == build_surface(g, punctures)
    assert small_vertices(X, 3).vbar


def test_spec_round_trip(tmp_path):
    T = builtin("annulus:2,3")
    path = tmp_path / "t.json"
    path.write_text(json.dumps(T.to_spec()))
    T2 = load_triangulation(path)
    assert T2.surface == T.surface
    assert T2.boundary == T.boundary


def test_bad_face_is_rejected():
    with pytest.raises(TriangulationError):
        load_triangulation({"faces": [{"edges": ["a", "b", "c", "d"], "flips": [False] * 4}]})


@pytest.mark.parametrize("g,punctures", [(0, (1,)), (0, (2,)), (0, ()), (0, (0, 3))])
def test_untriangulable_surfaces(g, punctures):
    with pytest.raises(TriangulationError):
        build_surface(g, punctures)


def test_unknown_builtin():
    with pytest.raises(TriangulationError):
        builtin("torus:1")

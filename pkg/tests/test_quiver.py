from __future__ import annotations

import numpy as np
import pytest

from skein_tori.quiver import face_coordinates, h_matrix, q_matrix, side_of, small_vertices

from conftest import ZOO, tri


@pytest.mark.parametrize("n", range(1, 7))
def test_face_coordinates(n):
    coords = face_coordinates(n)
    assert len(coords) == (n + 1) * (n + 2) // 2 - 3
    assert all(sum(c) == n and min(c) >= 0 and max(c) < n for c in coords)


def test_side_of_interior_is_none():
    assert side_of((1, 1, 1)) is None
    assert side_of((0, 1, 2)) is not None


@pytest.mark.parametrize("name", ZOO)
@pytest.mark.parametrize("n", [2, 3])
def test_q_antisymmetric_and_h_integral(name, n):
    T = tri(name)
    vs = small_vertices(T, n)
    Q = q_matrix(T, n, vs)
    assert np.array_equal(Q.data, -Q.data.T)
    # full arrows count 2, half arrows along the boundary count 1
    assert not (Q.data % 1).any()
    H = h_matrix(T, n, vs, Q)
    assert H.shape == Q.shape


def test_single_triangle_quiver_n2():
    T = tri("polygon:3")
    Q = q_matrix(T, 2)
    # three edge vertices, full arrows around the small inner triangle
    assert Q.shape == (3, 3)
    assert sorted(abs(x) for row in Q.tolist() for x in row) == [0, 0, 0, 2, 2, 2, 2, 2, 2]

from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from skein_tori.amatrix import (MatrixIdentityError, k_from_h, kbar_triangle, kbar_triangle_entry,
                                mat_e, mat_f, mat_g, reduced_blocks, verify_block_lemmas)
from skein_tori.quiver import face_coordinates
from skein_tori.surface import build_mu_triangulation, build_surface
from skein_tori.zlattice import determinant

from conftest import ZOO, ZOO_SURFACES, amats


@pytest.mark.parametrize("n", range(2, 13))
def test_e_f_g(n):
    E, F, G = mat_e(n), mat_f(n), mat_g(n)
    assert np.array_equal(E @ F, G)
    assert determinant(E.tolist()) == 1
    assert np.array_equal(G, G.T)


def _rot(v):
    return v[1:] + v[:1]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_triangle_formula_cyclic_invariance(n):
    coords = face_coordinates(n)
    for v, w in product(coords, repeat=2):
        assert kbar_triangle_entry(_rot(v), _rot(w)) == kbar_triangle_entry(v, w)


def test_triangle_formula_examples():
    assert kbar_triangle_entry((1, 1, 0), (1, 1, 0)) == 1
    assert kbar_triangle_entry((1, 1, 1), (1, 1, 1)) == 3
    assert kbar_triangle_entry((2, 1, 0), (1, 2, 0)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_triangle_formula_matches_inverse(n):
    A = amats("polygon:3", n)
    T = kbar_triangle(n)
    assert T.rows == A.kbar.rows
    assert np.array_equal(T.data, A.kbar.data)


def test_k_from_h_rejects_non_integral():
    with pytest.raises(MatrixIdentityError):
        k_from_h(np.array([[2, 0], [0, 3]]), 2)
    assert np.array_equal(k_from_h(np.array([[2, 1], [0, 1]]), 2), np.array([[1, -1], [0, 2]]))


@pytest.mark.parametrize("name", ZOO)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_identities_and_blocks(name, n):
    A = amats(name, n)
    assert all(A.checks.values()), A.checks
    rep = verify_block_lemmas(A)
    assert rep.ok, rep.to_dict()


@pytest.mark.parametrize("g,punctures", ZOO_SURFACES)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_blocks(g, punctures, n):
    rep = reduced_blocks(build_mu_triangulation(build_surface(g, punctures)), n)
    assert rep.ok, rep.verdicts


def test_corrupted_kq_breaks_block_report():
    A = amats("annulus:1,2", 3)
    data = A.kq.data.copy()
    s = len(A.vs_star.interior)
    data[s, s] += 1
    from dataclasses import replace
    from skein_tori.zlattice import IntMatrix
    bad = replace(A, kq=IntMatrix(data, A.kq.rows, A.kq.cols))
    assert not verify_block_lemmas(bad).verdicts["B = diag(B_i)"]

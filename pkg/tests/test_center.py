from __future__ import annotations

import random
from itertools import product
from math import gcd, isqrt

import numpy as np
import pytest
from hypothesis import given, strategies as st

from skein_tori.center import (NOT_ASSERTED, NOT_COVERED, balanced_lattice, center_lattice,
                               closed_form_rank, g_matrix, gamma, gamma_variant, image_nu,
                               image_reversed_nu, lambda_partial, palindromic_basis, rank, root_params,
                               x_family, x_preimage)
from skein_tori.zlattice import kernel_mod

from conftest import data, reduced_data


@pytest.mark.parametrize("n,m_pp,expected", [
    (2, 4, dict(d_p=2, m_p=2, d=2, m=1, n_p=2, m_star=1, d_star=1, N=2, case_label="m* odd, n even")),
    (3, 12, dict(d_p=3, m_p=4, d=2, m=2, n_p=3, m_star=2, d_star=1, k=1, m_bar=1, N=6,
                 case_label="m* even, n odd")),
    (2, 8, dict(d_p=2, m_p=4, d=4, m=1, n_p=1, m_star=2, d_star=2, N=2)),
    (3, 5, dict(d_p=1, m_p=5, d=1, m=5, n_p=6, N=15, case_label="m' odd", m_star=None)),
])
def test_root_params_examples(n, m_pp, expected):
    p = root_params(n, m_pp)
    for key, value in expected.items():
        assert getattr(p, key) == value, key


@given(st.integers(2, 40), st.integers(2, 200))
def test_root_params_invariants(n, m_pp):
    p = root_params(n, m_pp)
    assert p.d_p * p.m_p == m_pp and gcd(n, m_pp) == p.d_p
    assert p.d * p.m == p.m_p and p.d * p.n_p == 2 * n
    assert (p.n_p % 2 == 0) == (n % p.d == 0)
    assert p.m == 2 ** p.k * p.m_bar and p.m_bar % 2 == 1
    if p.m_p_even:
        assert 2 * p.m_star == p.m_p and 2 * p.d_star == p.d


def test_root_params_rejects_small():
    with pytest.raises(ValueError):
        root_params(1, 4)
    with pytest.raises(ValueError):
        root_params(3, 1)


@pytest.mark.parametrize("name,n,m_pp", [("polygon:3", 2, 4), ("polygon:3", 3, 4), ("polygon:3", 2, 3),
                                         ("polygon:4", 2, 4), ("annulus:1,1", 2, 2)])
def test_center_by_box_enumeration(name, n, m_pp):
    D = data(name, n)
    lat = center_lattice(D, root_params(n, m_pp))
    r = D.c_rank
    pts = list(product(range(-2, 3), repeat=r)) if 5 ** r <= 20000 else \
        [tuple(random.Random(i).randint(-2, 2) for _ in range(r)) for i in range(3000)]
    P = D.P
    for c in pts:
        central = not (np.array(c, dtype=np.int64) @ P % m_pp).any()
        assert lat.explicit.contains(list(c)) == central


@pytest.mark.parametrize("name,n,m_pp", [("polygon:3", 2, 4), ("polygon:4", 3, 8), ("annulus:1,2", 2, 12)])
def test_gamma_matches_k_space_membership(name, n, m_pp):
    D = data(name, n)
    p = root_params(n, m_pp)
    G = gamma(D, p)
    Xk = x_family(D, p, gamma_variant(D, p))
    rng = random.Random(0)
    for _ in range(300):
        c = [rng.randint(-6, 6) for _ in range(D.c_rank)]
        k = (np.array(c, dtype=np.int64) @ D.K).tolist()
        assert G.contains(c) == Xk.contains(k)


@pytest.mark.parametrize("name,n,m_pp", [("polygon:3", 2, 4), ("annulus:2,2", 3, 12)])
def test_x_family_lies_in_balanced(name, n, m_pp):
    D = data(name, n)
    B = balanced_lattice(D)
    Xk = x_family(D, root_params(n, m_pp), "X")
    assert B.contains_lattice(Xk)


def _enumerate_image(gens_fn, n, M):
    seen = set()
    for p in product(range(M), repeat=n - 1):
        seen.add(gens_fn(p))
    return len(seen)


@pytest.mark.parametrize("n,M", [(2, 4), (3, 4), (3, 6), (4, 4), (4, 8), (5, 3)])
def test_image_nu_by_enumeration(n, M):
    G = g_matrix(n)

    def nu(p):
        return tuple(2 * sum(p[i] * G[i][j] for i in range(n - 1)) % M for j in range(n - 1))

    assert image_nu(n, M) == _enumerate_image(nu, n, M)
    assert image_nu(3, 4) == 4


@pytest.mark.parametrize("n,M", [(2, 4), (3, 4), (4, 8), (5, 6)])
def test_image_reversed_nu_by_enumeration(n, M):
    G = g_matrix(n)
    basis = palindromic_basis(n)
    seen = set()
    for coeffs in product(range(M), repeat=len(basis)):
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n - 1)]
        seen.add(tuple(2 * sum(v[i] * G[i][j] for i in range(n - 1)) % M for j in range(n - 1)))
    assert image_reversed_nu(n, M) == len(seen)


@pytest.mark.parametrize("name,n,m_pp,variant", [
    ("polygon:3", 2, 8, "X"), ("polygon:3", 3, 4, "X"), ("polygon:4", 2, 4, "X"),
    ("polygon:4", 2, 4, "Xbar"), ("polygon:4", 3, 8, "Xstar"),
])
def test_wrong_variant_breaks_equality(name, n, m_pp, variant):
    D = data(name, n)
    p = root_params(n, m_pp)
    assert center_lattice(D, p).equal
    G = x_preimage(D, p, variant)
    use_boundary = not p.m_p_even or p.m_star % 2 == 1
    wrong = G + lambda_partial(D) if use_boundary else G
    assert not wrong.equals(kernel_mod(D.P.tolist(), m_pp))


@pytest.mark.parametrize("name,n,m_pp", [("polygon:4", 2, 3), ("polygon:4", 2, 12)])
def test_boundary_part_is_needed(name, n, m_pp):
    D = data(name, n)
    p = root_params(n, m_pp)
    assert not gamma(D, p).equals(kernel_mod(D.P.tolist(), m_pp))


@pytest.mark.parametrize("name", ["polygon:3", "annulus:1,2", "genus:1,1"])
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m_pp", [2, 4, 5, 6, 8])
def test_rank_is_square_and_consistent(name, n, m_pp):
    rep = rank(data(name, n), m_pp)
    assert isqrt(rep.rank_kernel) ** 2 == rep.rank_kernel
    assert rep.ranks_agree and rep.lattice_equality == "equal"
    assert rep.closed_agrees is not False and rep.z_agrees is not False


def test_closed_form_examples():
    assert rank(data("polygon:3", 3), 2).rank_closed == 64
    rep = rank(data("polygon:3", 2), 4)
    assert rep.params.case_label == "m* odd, n even"
    assert rep.rank_closed == rep.rank_kernel == 4


def test_reduced_unasserted_branch_is_flagged():
    D = reduced_data(0, (3,), 2)
    rep = rank(D, 4)
    assert rep.lattice_equality == NOT_ASSERTED
    assert rep.ranks_agree


def test_closed_form_not_covered_is_reported():
    D = reduced_data(0, (3,), 2)
    p = root_params(2, 4)
    value = closed_form_rank(D.surface, 2, p, reduced=True)
    assert value == NOT_COVERED or value == rank(D, 4).rank_kernel


@pytest.mark.parametrize("g,punctures", [(0, (3,)), (0, (1, 2)), (1, (1,))])
@pytest.mark.parametrize("n", [3])
@pytest.mark.parametrize("m_pp", [2, 4, 6, 9])
def test_reduced_center(g, punctures, n, m_pp):
    rep = rank(reduced_data(g, punctures, n), m_pp, with_quotients=True)
    assert rep.ok and rep.lattice_equality == "equal"


def test_quotients_reported_with_rank():
    rep = rank(data("annulus:2,2", 2), 8, with_quotients=True)
    assert rep.quotient_orders
    assert all(q["computed"] == q["predicted"] for q in rep.quotient_orders.values())

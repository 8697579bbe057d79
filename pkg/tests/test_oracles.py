from __future__ import annotations

import random

import numpy as np
import pytest

from skein_tori.zlattice import kernel_mod

from oracles import count_kernel, count_kernel_naive


@pytest.mark.parametrize("seed", range(20))
def test_meet_in_the_middle_matches_naive(seed):
    rng = random.Random(seed)
    r, m = rng.randint(1, 5), rng.randint(2, 5)
    P = np.array([[rng.randint(-5, 5) for _ in range(r)] for _ in range(r)])
    P = P - P.T
    assert count_kernel(P, m) == count_kernel_naive(P, m)
    assert count_kernel(P, m) == m ** r // kernel_mod(P.tolist(), m).index()

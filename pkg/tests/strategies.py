from __future__ import annotations

from hypothesis import strategies as st


@st.composite
def antisymmetric(draw, max_size: int = 10, max_entry: int = 9):
    r = draw(st.integers(0, max_size))
    P = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            x = draw(st.integers(-max_entry, max_entry))
            P[i][j], P[j][i] = x, -x
    return P


@st.composite
def int_matrix(draw, max_rows: int = 5, max_cols: int = 5, max_entry: int = 9):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(st.integers(-max_entry, max_entry)) for _ in range(c)] for _ in range(r)]

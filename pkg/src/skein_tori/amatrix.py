"""The A-version torus matrices and their block structure.

K-matrices are obtained as n times the inverse of the corresponding H
matrix and certified by the exact identity K H = n I.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .quiver import (VertexSets, face_coordinates, h_matrix, label, q_matrix,
                     small_vertices, vertex_key)
from .surface import ExtendedTriangulation, Triangulation, attach_triangles, polygon
from .zlattice import IntMatrix, int_matmul, inverse_scaled, kernel_mod, lattice_from_rows, to_rows


class MatrixIdentityError(ArithmeticError):
    """A matrix identity expected to hold exactly failed."""

    def __init__(self, identity: str, detail: str = ""):
        super().__init__(f"{identity} failed" + (f": {detail}" if detail else ""))
        self.identity = identity


# ---------------------------------------------------------------------------
# Inversion


def k_from_h(H, n: int):
    """The unique integer matrix K with K H = n I.

    A floating-point candidate is rounded and certified exactly; if the
    certificate fails the exact fraction-free route is used.  Accepts an
    IntMatrix (labels are transposed) or a plain array.
    """
    data = H.data if isinstance(H, IntMatrix) else np.asarray(H, dtype=object)
    r = data.shape[0]
    if data.shape != (r, r):
        raise ValueError("H must be square")
    target = n * np.eye(r, dtype=np.int64)
    K = None
    if r:
        try:
            cand = np.linalg.inv(data.astype(float)) * n
            if np.all(np.isfinite(cand)) and np.max(np.abs(cand)) < 2**50:
                K = np.rint(cand).astype(np.int64)
                if not np.array_equal(int_matmul(K, data), target):
                    K = None
        except np.linalg.LinAlgError:
            K = None
    else:
        K = np.zeros((0, 0), dtype=np.int64)
    if K is None:
        try:
            K = np.array(inverse_scaled(to_rows(data), n), dtype=object)
        except ZeroDivisionError as exc:
            raise MatrixIdentityError("H invertible", "H is singular") from exc
        except ArithmeticError as exc:
            raise MatrixIdentityError("K H = n I", "n H^-1 is not integral") from exc
        if np.max(np.abs(K)) < 2**62:
            K = K.astype(np.int64)
    if isinstance(H, IntMatrix):
        return IntMatrix(K, H.cols, H.rows)
    return K


# ---------------------------------------------------------------------------
# Single triangle


def kbar_triangle_entry(v: tuple[int, int, int], w: tuple[int, int, int]) -> int:
    """Closed formula jk' + ki' + i'j after a cyclic rotation making i' <= i, j' >= j."""
    values = set()
    for s in range(3):
        i, j, k = v[s:] + v[:s]
        i2, j2, k2 = w[s:] + w[:s]
        if i2 <= i and j2 >= j:
            values.add(j * k2 + k * i2 + i2 * j)
    if len(values) != 1:
        raise MatrixIdentityError("triangle formula", f"rotations disagree for {v}, {w}: {values}")
    return values.pop()


def kbar_triangle(n: int) -> IntMatrix:
    """K-bar of a single triangle by the closed formula, labelled like polygon(3)."""
    T = polygon(3)
    coords = face_coordinates(n)
    keys = [vertex_key(T, 0, c, n) for c in coords]
    vs = small_vertices(T, n)
    pos = {k: c for k, c in zip(keys, coords)}
    data = np.array([[kbar_triangle_entry(pos[a], pos[b]) for b in vs.vbar] for a in vs.vbar],
                    dtype=np.int64).reshape(len(vs.vbar), len(vs.vbar))
    return IntMatrix(data, vs.vbar, vs.vbar)


# ---------------------------------------------------------------------------
# Structural matrices


def mat_e(n: int) -> np.ndarray:
    m = n - 1
    return np.array([[i - j + 1 if i >= j else 0 for j in range(1, m + 1)]
                     for i in range(1, m + 1)], dtype=np.int64).reshape(m, m)


def mat_f(n: int) -> np.ndarray:
    m = n - 1
    F = np.zeros((m, m), dtype=np.int64)
    for j in range(1, m + 1):
        F[0, j - 1] = n - j
        if j < m:
            F[j, j - 1] = -n
    return F


def mat_g(n: int) -> np.ndarray:
    m = n - 1
    return np.array([[i * (n - j) if i <= j else j * (n - i) for j in range(1, m + 1)]
                     for i in range(1, m + 1)], dtype=np.int64).reshape(m, m)


def anti_identity(m: int) -> np.ndarray:
    return np.eye(m, dtype=np.int64)[::-1].copy()


def _blocks(cells: list[list[np.ndarray | None]], m: int) -> np.ndarray:
    rows = []
    for row in cells:
        rows.append(np.hstack([c if c is not None else np.zeros((m, m), dtype=np.int64)
                               for c in row]))
    return np.vstack(rows) if rows else np.zeros((0, 0), dtype=np.int64)


def cyclic_blocks(X: np.ndarray, count: int, wrap: bool = True) -> np.ndarray:
    """Blocks X on the subdiagonal and, if wrap, in the top-right corner."""
    m = X.shape[0]
    if count == 0:
        return np.zeros((0, 0), dtype=np.int64)
    cells = [[None] * count for _ in range(count)]
    for a in range(1, count):
        cells[a][a - 1] = X
    if wrap:
        cells[0][count - 1] = X if cells[0][count - 1] is None else cells[0][count - 1] + X
    return _blocks(cells, m)


def diag_blocks(X: np.ndarray, count: int, skip_first: bool = False) -> np.ndarray:
    m = X.shape[0]
    cells = [[None] * count for _ in range(count)]
    for a in range(count):
        if not (skip_first and a == 0):
            cells[a][a] = X
    return _blocks(cells, m) if count else np.zeros((0, 0), dtype=np.int64)


def row_of_blocks(X: np.ndarray, count: int, at_end: bool = True) -> np.ndarray:
    m = X.shape[0]
    cells = [[None] * count]
    cells[0][count - 1 if at_end else 0] = X
    return _blocks(cells, m)


def block_diag(mats: list[np.ndarray]) -> np.ndarray:
    size = sum(M.shape[0] for M in mats)
    cols = sum(M.shape[1] for M in mats)
    out = np.zeros((size, cols), dtype=np.int64)
    r = c = 0
    for M in mats:
        out[r:r + M.shape[0], c:c + M.shape[1]] = M
        r += M.shape[0]
        c += M.shape[1]
    return out


@dataclass
class StructuralMatrices:
    n: int
    e: np.ndarray
    f: np.ndarray
    g: np.ndarray
    gprime: np.ndarray
    iprime: np.ndarray

    # block constructors, `count` blocks of size n-1 per row and column
    def A(self, count):
        return diag_blocks(-self.n * np.eye(self.n - 1, dtype=np.int64), count)

    def B(self, count):
        return cyclic_blocks(self.n * np.eye(self.n - 1, dtype=np.int64), count)

    def B_O(self, count):
        return cyclic_blocks(self.n * np.eye(self.n - 1, dtype=np.int64), count, wrap=False)

    def E(self, count):
        return row_of_blocks(self.n * np.eye(self.n - 1, dtype=np.int64), count)

    def E_T(self, count):
        return row_of_blocks(self.n * self.iprime, count, at_end=False).T.copy()

    def G_tilde(self, count):
        return cyclic_blocks(self.g, count)

    def G_tilde_O(self, count):
        return cyclic_blocks(self.g, count, wrap=False)

    def G_diag(self, count):
        return diag_blocks(self.g, count)

    def G_O(self, count):
        return diag_blocks(self.g, count, skip_first=True)

    def E_G(self, count):
        return row_of_blocks(self.g, count)

    def E_G_T(self, count):
        return row_of_blocks(self.gprime, count, at_end=False).T.copy()

    def L(self, r: int) -> np.ndarray:
        """Boundary block of K on (U, W) for a component with r punctures."""
        if r == 1:
            return np.zeros((self.n - 1, self.n - 1), dtype=np.int64)
        return diag_blocks(-self.g, r) + cyclic_blocks(self.g, r)

    def B_component(self, r: int) -> np.ndarray:
        if r == 1:
            return self.n * np.eye(self.n - 1, dtype=np.int64)
        return self.B(r)

    def P_reduced(self, r: int) -> np.ndarray:
        n, m = self.n, self.n - 1
        if r == 1:
            return -n * np.eye(m, dtype=np.int64) + n * self.iprime
        h = r // 2
        if r % 2 == 0:
            return np.block([[self.A(h), -self.A(h)], [self.B(h), self.A(h)]])
        Z = np.zeros
        return np.block([
            [self.A(h), -self.A(h), Z((m * h, m), dtype=np.int64)],
            [self.B_O(h), self.A(h), self.E_T(h)],
            [self.E(h), Z((m, m * h), dtype=np.int64), -n * np.eye(m, dtype=np.int64)],
        ])

    def S_reduced(self, r: int) -> np.ndarray:
        m = self.n - 1
        if r == 1:
            return self.g + self.gprime
        h = r // 2
        if r % 2 == 0:
            return np.block([[self.G_diag(h), self.G_diag(h)], [self.G_tilde(h), self.G_diag(h)]])
        Z = np.zeros
        return np.block([
            [self.G_diag(h), self.G_diag(h), Z((m * h, m), dtype=np.int64)],
            [self.G_tilde_O(h), self.G_diag(h), self.E_G_T(h)],
            [self.E_G(h), Z((m, m * h), dtype=np.int64), self.g],
        ])


def structural(n: int) -> StructuralMatrices:
    if n < 2:
        raise ValueError("n must be at least 2")
    g = mat_g(n)
    return StructuralMatrices(n, mat_e(n), mat_f(n), g, g[::-1].copy(), anti_identity(n - 1))


# ---------------------------------------------------------------------------
# Assembled matrices


@dataclass
class AMatrices:
    n: int
    vs_bar: VertexSets
    vs_star: VertexSets
    qbar: IntMatrix
    hbar: IntMatrix
    kbar: IntMatrix
    pbar: IntMatrix
    qbar_star: IntMatrix
    hbar_star: IntMatrix
    kbar_star: IntMatrix
    q: IntMatrix
    h: IntMatrix
    k: IntMatrix
    p: IntMatrix
    kq: IntMatrix
    c: IntMatrix
    extended: ExtendedTriangulation | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def interior_star(self):
        return self.vs_star.interior

    @property
    def w_set(self):
        return self.vs_star.w_set

    @property
    def u_set(self):
        return self.vs_star.u_set


def change_of_variables(X: ExtendedTriangulation, vss: VertexSets, vs_base: VertexSets) -> IntMatrix:
    """The matrix C on V' x Vbar*: identity on V', minus one at p(v) for attached v.

    For a vertex ijk of an attached triangle outside the base, p(ijk) is the
    vertex (0, n-k, k) of the same triangle.
    """
    n, tri = vss.n, X.full
    idx = vss.index()
    attached = set(X.attached.values())
    base = set(vs_base.vbar)
    C = np.zeros((len(vss.v_a), len(vss.vbar)), dtype=np.int64)
    for r, v in enumerate(vss.v_a):
        C[r, idx[v]] = 1
        if v not in base:
            f, (i, j, k) = next((f, c) for f, c in vss.incarnations[v] if f in attached)
            C[r, idx[vertex_key(tri, f, (0, n - k, k), n)]] -= 1
    return IntMatrix(C, vss.v_a, vss.vbar)


def _eye(r: int, c: int = 1) -> np.ndarray:
    return c * np.eye(r, dtype=np.int64)


def _record(checks: dict, name: str, ok: bool, strict: bool):
    checks[name] = bool(ok)
    if strict and not ok:
        raise MatrixIdentityError(name)


def p_matrices(T: Triangulation, n: int, strict: bool = True) -> AMatrices:
    """All torus matrices for a triangulation and its extension."""
    vs = small_vertices(T, n)
    Qb = q_matrix(T, n, vs)
    Hb = h_matrix(T, n, vs, Qb)
    Kb = k_from_h(Hb, n)
    Kb = IntMatrix(Kb.data, vs.vbar, vs.vbar)
    Pb = Kb @ Qb @ Kb.T
    X = attach_triangles(T)
    vss = small_vertices(X, n)
    Qs = q_matrix(X, n, vss)
    Hs = h_matrix(X, n, vss, Qs)
    Ks = IntMatrix(k_from_h(Hs, n).data, vss.vbar, vss.vbar)
    H = Hs.restrict(vss.v_x, vss.v_a)
    K = k_from_h(H, n)  # rows v_a, columns v_x
    Q = Qs.restrict(vss.v_x, vss.v_x)
    KQ = K @ Q
    P = KQ @ K.T
    C = change_of_variables(X, vss, vs)
    A = AMatrices(n, vs, vss, Qb, Hb, Kb, Pb, Qs, Hs, Ks, Q, H, K, P, KQ, C, X)
    c = A.checks
    _record(c, "Kbar Hbar = nI", np.array_equal(int_matmul(Kb.data, Hb.data), _eye(len(vs.vbar), n)), strict)
    _record(c, "Kbar* Hbar* = nI", np.array_equal(int_matmul(Ks.data, Hs.data), _eye(len(vss.vbar), n)), strict)
    _record(c, "K H = nI", np.array_equal(int_matmul(K.data, H.data), _eye(len(vss.v_a), n)), strict)
    CK = C @ Ks
    _record(c, "K = (C Kbar*) restricted", np.array_equal(CK.restrict(vss.v_a, vss.v_x).data, K.data)
            and not CK.restrict(vss.v_a, vss.u_set).data.any(), strict)
    # V and V' are matched through C: K C^T is a square form on V'
    Kt = int_matmul(K.data, C.restrict(vss.v_a, vss.v_x).data.T)
    _record(c, "P = KQK^T = n(K - K^T)", np.array_equal(P.data, n * (Kt - Kt.T)), strict)
    _record(c, "P antisymmetric", np.array_equal(P.data, -P.data.T), strict)
    _record(c, "P divisible by n", not (P.data % n).any(), strict)
    _record(c, "Pbar = n(Kbar - Kbar^T)", np.array_equal(Pb.data, n * (Kb.data - Kb.data.T)), strict)
    s = len(vss.interior)
    _record(c, "KQ upper-left = -2nI", np.array_equal(KQ.data[:s, :s], _eye(s, -2 * n)), strict)
    _record(c, "KQ lower-left = O", not KQ.data[s:, :s].any(), strict)
    return A


# ---------------------------------------------------------------------------
# Block lemma reports

SAMPLE_CAP = 200
SAMPLE_SIZE = 500


@dataclass
class BlockReport:
    verdicts: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def add(self, name: str, ok: bool, detail: str = ""):
        self.verdicts[name] = bool(ok)
        if detail and not ok:
            self.details[name] = detail

    def to_dict(self) -> dict:
        return {"ok": self.ok, "verdicts": dict(self.verdicts), "details": dict(self.details)}


def _component_sizes_w_order(X: ExtendedTriangulation) -> list[int]:
    # W and U list the last boundary component first
    return [len(edges) for edges in reversed(X.base.boundary)]


def _diff(got: np.ndarray, want: np.ndarray) -> str:
    if got.shape != want.shape:
        return f"shape {got.shape} != {want.shape}"
    bad = np.argwhere(got != want)
    return f"{len(bad)} entries differ, first at {tuple(bad[0])}" if len(bad) else ""


def _block_permutation(got: np.ndarray, want: np.ndarray, size: int) -> list[int] | None:
    """A permutation of diagonal blocks turning `want` into `got`, if one exists."""
    count = got.shape[0] // size if size else 0
    if count == 0 or got.shape != want.shape or count > 8:
        return None
    from itertools import permutations
    for perm in permutations(range(count)):
        idx = [p * size + a for p in perm for a in range(size)]
        if np.array_equal(want[np.ix_(idx, idx)], got):
            return list(perm)
    return None


def pprime_prediction(vs: VertexSets, a, b, n: int) -> int:
    """n times the number of corners of an incarnation of a at the puncture of b with coordinate n-p."""
    tri = vs.triangulation
    e, p = b[1], b[2]
    f, s = tri.slots[e][0]
    target = tri.puncture_of_corner[(f, s)]
    f2, c = vs.incarnations[a][0]
    return n * sum(1 for t in range(3) if tri.puncture_of_corner[(f2, t)] == target and c[t] == n - p)


def mod2_kernel_pattern(A: AMatrices) -> list[list[int]]:
    """Expected basis of the mod-2 kernel of (D/n - C1) on Z_2^W."""
    n = A.n
    if n % 2:
        return []
    return [[1 if v[-1] % 2 else 0 for v in _w_coordinates(A)]]


def _w_coordinates(A: AMatrices) -> list[tuple]:
    """(component, position, k) for each W vertex, in W order."""
    X, n = A.extended, A.n
    where = {}
    for (comp, pos), f in X.attached.items():
        for k in range(1, n):
            where[vertex_key(X.full, f, (0, k, n - k), n)] = (comp, pos, k)
    return [where[v] for v in A.w_set]


def x1_matrix(A: AMatrices) -> np.ndarray:
    """(D + C1 A)/n, the interior-by-W block of KQ divided by n."""
    s = len(A.interior_star)
    block = A.kq.data[:s, s:]
    if (block % A.n).any():
        raise MatrixIdentityError("KQ upper-right divisible by n")
    return block // A.n


def verify_block_lemmas(A: AMatrices, T: Triangulation | None = None, n: int | None = None,
                        seed: int = 0) -> BlockReport:
    n = n or A.n
    X = A.extended if A.extended is not None else attach_triangles(T)
    st = structural(n)
    rep = BlockReport()
    vss, vs = A.vs_star, A.vs_bar
    m = n - 1
    sizes = _component_sizes_w_order(X)

    got = A.kbar_star.data[np.ix_(_pos(vss, vss.w_set), _pos(vss, vss.w_set))]
    kq_star = int_matmul(A.kbar_star.data, A.qbar_star.data)
    a_block = kq_star[np.ix_(_pos(vss, vss.w_set), _pos(vss, vss.w_set))]
    rep.add("A = -nI", np.array_equal(a_block, _eye(len(vss.w_set), -n)), _diff(a_block, _eye(len(vss.w_set), -n)))

    s = len(vss.interior)
    b_got = A.kq.data[s:, s:] - _eye(len(vss.u_set), n)
    b_want = block_diag([st.B_component(r) for r in sizes])
    detail = _diff(b_got, b_want)
    if detail and len(sizes) > 1:
        perm = _block_permutation(b_got, b_want, 0)
        detail += f"; component permutation {perm}" if perm else ""
    rep.add("B = diag(B_i)", np.array_equal(b_got, b_want), detail)

    l_got = A.k.data[s:, s:]
    l_want = block_diag([st.L(r) for r in sizes])
    rep.add("K32 - K22 = diag(L_i)", np.array_equal(l_got, l_want), _diff(l_got, l_want))
    del got, m

    # P' on (interior of Vbar, boundary of Vbar) pairs
    idx = vs.index()
    kq_bar = int_matmul(A.kbar.data, A.qbar.data)
    pairs = [(a, b) for a in vs.interior for b in vs.boundary]
    if len(vs.vbar) > SAMPLE_CAP and len(pairs) > SAMPLE_SIZE:
        pairs = random.Random(seed).sample(pairs, SAMPLE_SIZE)
    bad = [(label(a), label(b)) for a, b in pairs
           if kq_bar[idx[a], idx[b]] != pprime_prediction(vs, a, b, n)]
    rep.add("P' Kronecker formula", not bad, f"{len(bad)} of {len(pairs)} pairs differ, e.g. {bad[:1]}")

    # mod-2 kernel of the (X1) matrix
    M = x1_matrix(A)
    ker = kernel_mod(M.T.tolist(), 2) if M.size else lattice_from_rows([], len(vss.w_set), 2)
    want = lattice_from_rows(mod2_kernel_pattern(A), len(vss.w_set), 2)
    rep.add("mod-2 kernel of D/n - C1", ker.equals(want), "kernel differs from the odd-position pattern")
    return rep


def _pos(vs: VertexSets, verts) -> list[int]:
    idx = vs.index()
    return [idx[v] for v in verts]


def reduced_blocks(Tmu: ExtendedTriangulation, n: int) -> BlockReport:
    """Boundary blocks of Kbar Qbar and Kbar for the reduced triangulation."""
    vs = small_vertices(Tmu, n)
    Q = q_matrix(Tmu, n, vs)
    K = k_from_h(h_matrix(Tmu, n, vs, Q), n).data
    KQ = int_matmul(K, Q.data)
    order = vs.interior + vs.boundary
    pos = _pos(vs, order)
    KQ, K = KQ[np.ix_(pos, pos)], K[np.ix_(pos, pos)]
    s = len(vs.interior)
    st = structural(n)
    sizes = [len(edges) for edges in Tmu.full.boundary]
    rep = BlockReport()
    offset = s
    for comp, (r, blocks) in enumerate(zip(sizes, vs.components)):
        size = len(blocks["W"]) + len(blocks["U"]) + len(blocks["V"])
        sl = slice(offset, offset + size)
        offset += size
        p_want, s_want = st.P_reduced(r), st.S_reduced(r)
        rep.add(f"P_{comp + 1} (r={r})", np.array_equal(KQ[sl, sl], p_want),
                _diff(KQ[sl, sl], p_want) + f"\ngot\n{KQ[sl, sl]}\nwant\n{p_want}")
        rep.add(f"S_{comp + 1} (r={r})", np.array_equal(K[sl, sl], s_want),
                _diff(K[sl, sl], s_want) + f"\ngot\n{K[sl, sl]}\nwant\n{s_want}")
    off_diag = KQ[s:, s:] - block_diag([st.P_reduced(r) for r in sizes])
    rep.add("P = diag(P_i)", not off_diag.any(), "nonzero entries between components")
    return rep

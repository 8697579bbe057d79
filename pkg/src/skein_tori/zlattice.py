"""Exact integer linear algebra.

Two engines live here.  Exact Smith, Hermite and skew normal forms work on
Python integers and are meant for small or moderate matrices.  Subgroups of
Z^r that contain M*Z^r for a known modulus M are handled by an echelon
(Howell) form over Z_M on numpy int64 arrays, which keeps entries below M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

Matrix = list[list[int]]

INFINITE = "infinite"


def identity(r: int) -> Matrix:
    return [[int(i == j) for j in range(r)] for i in range(r)]


def to_rows(M) -> Matrix:
    """Convert any 2d array-like into a list of lists of Python ints."""
    if isinstance(M, np.ndarray):
        return [[int(x) for x in row] for row in M.tolist()]
    return [[int(x) for x in row] for row in M]


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    Bt = transpose(B)
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def determinant(M: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def solve_fraction_free(A: Matrix, B: Matrix) -> tuple[Matrix, int]:
    """Solve A X = B exactly for square nonsingular A.

    Returns (Y, d) with A Y = d * B, using Gauss-Jordan Bareiss elimination
    on the augmented matrix, so X = Y / d.
    """
    n = len(A)
    m = len(B[0]) if B else 0
    aug = [list(map(int, A[i])) + list(map(int, B[i])) for i in range(n)]
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        row_k = aug[k]
        akk = row_k[k]
        for i in range(n):
            if i == k:
                continue
            row_i = aug[i]
            aik = row_i[k]
            for j in range(n + m):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    d = aug[n - 1][n - 1]
    return [row[n:] for row in aug], d


def inverse_scaled(H: Matrix, scale: int) -> Matrix:
    """Return scale * H^{-1}, raising ArithmeticError if it is not integral."""
    n = len(H)
    Y, det = solve_fraction_free(H, identity(n))
    out = []
    for row in Y:
        new = []
        for y in row:
            num = y * scale
            if num % det:
                raise ArithmeticError("scale * H^-1 is not integral")
            new.append(num // det)
        out.append(new)
    return out


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms over Z


def snf(M) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: U M V = D.

    D is diagonal (rectangular), d_i | d_{i+1}, d_i >= 0; U and V are
    unimodular.
    """
    A = to_rows(M)
    r = len(A)
    c = len(A[0]) if r else 0
    U = identity(r)
    V = identity(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        # pivot: smallest nonzero |entry| in the trailing block
        best = None
        for i in range(t, r):
            row = A[i]
            for j in range(t, c):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            p = A[t][t]
            # clear column t
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, c):
                            ri[j] -= q * rt[j]
                        ui, ut = U[i], U[t]
                        for j in range(r):
                            ui[j] -= q * ut[j]
                    if A[i][t]:
                        done = False
            # clear row t
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                        for row in V:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if not done:
                # move the smallest remainder into the pivot position
                best = (abs(p), t, t)
                for i in range(t + 1, r):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, c):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # divisibility against the trailing block
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rt, rb = A[t], A[bad]
            for j in range(t, c):
                rt[j] += rb[j]
            ut, ub = U[t], U[bad]
            for j in range(r):
                ut[j] += ub[j]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def smith_invariants(M) -> list[int]:
    """Diagonal of the Smith form, including zeros, length min(r, c)."""
    _, D, _ = snf(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def hnf(M) -> Matrix:
    """Row-style Hermite normal form; zero rows dropped.

    Pivots are positive and entries above a pivot are reduced into
    [0, pivot).
    """
    A = [row[:] for row in to_rows(M) if any(row)]
    if not A:
        return []
    c = len(A[0])
    out: Matrix = []
    rows = A
    for j in range(c):
        nz = [row for row in rows if row[j]]
        zero = [row for row in rows if not row[j]]
        if not nz:
            continue
        piv = nz[0]
        rest = []
        for row in nz[1:]:
            a, b = piv[j], row[j]
            g, s, t = xgcd(a, b)
            new_piv = [s * x + t * y for x, y in zip(piv, row)]
            other = [(a // g) * y - (b // g) * x for x, y in zip(piv, row)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv[j] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        rows = zero + rest
    # reduce above pivots
    pivcols = [next(j for j, x in enumerate(row) if x) for row in out]
    for k in range(len(out)):
        j = pivcols[k]
        p = out[k][j]
        for i in range(k):
            q = out[i][j] // p
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[k])]
    return out


# ---------------------------------------------------------------------------
# Skew-symmetric normal form


@dataclass
class SkewDecomposition:
    x: Matrix
    h: list[int]
    zeros: int

    def block_form(self) -> Matrix:
        r = len(self.x)
        B = [[0] * r for _ in range(r)]
        for i, hi in enumerate(self.h):
            B[2 * i][2 * i + 1] = hi
            B[2 * i + 1][2 * i] = -hi
        return B


def _is_antisymmetric(P: Matrix) -> bool:
    r = len(P)
    return all(len(row) == r for row in P) and all(
        P[i][j] == -P[j][i] for i in range(r) for j in range(i, r)
    )


def skew_normal_form(P, pivot: str = "min-first") -> SkewDecomposition:
    """Congruence normal form X^T P X of an antisymmetric integer matrix.

    pivot selects the tie-break among entries of minimal absolute value:
    "min-first" takes the first in row-major order, "min-last" the last.
    """
    A = to_rows(P)
    if not _is_antisymmetric(A):
        raise ValueError("skew_normal_form needs an antisymmetric matrix")
    if pivot not in ("min-first", "min-last"):
        raise ValueError(f"unknown pivot rule {pivot!r}")
    r = len(A)
    X = identity(r)

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in X:
            row[i], row[j] = row[j], row[i]

    def negate(i):
        A[i] = [-x for x in A[i]]
        for row in A:
            row[i] = -row[i]
        for row in X:
            row[i] = -row[i]

    def add(src, dst, c):
        # basis_dst += c * basis_src, applied as a congruence
        if not c:
            return
        rs, rd = A[src], A[dst]
        for j in range(r):
            rd[j] += c * rs[j]
        for row in A:
            row[dst] += c * row[src]
        for row in X:
            row[dst] += c * row[src]

    def find_pivot(s):
        best = None
        for i in range(s, r):
            row = A[i]
            for j in range(i + 1, r):
                x = row[j]
                if x:
                    ax = abs(x)
                    if best is None or ax < best[0] or (pivot == "min-last" and ax == best[0]):
                        best = (ax, i, j)
        return best

    h: list[int] = []
    s = 0
    while s + 1 < r:
        best = find_pivot(s)
        if best is None:
            break
        while True:
            _, i, j = best
            swap(s, i)
            if j == s:
                j = i
            swap(s + 1, j)
            if A[s][s + 1] < 0:
                negate(s + 1)
            p = A[s][s + 1]
            for k in range(s + 2, r):
                if A[s][k]:
                    add(s + 1, k, -(A[s][k] // p))
                if A[s + 1][k]:
                    add(s, k, A[s + 1][k] // p)
            rem = None
            for k in range(s + 2, r):
                for x in (A[s][k], A[s + 1][k]):
                    if x and (rem is None or abs(x) < rem):
                        rem = abs(x)
            if rem is not None:
                best = find_pivot(s)
                continue
            bad = None
            for a in range(s + 2, r):
                row = A[a]
                for b in range(a + 1, r):
                    if row[b] % p:
                        bad = a
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add(bad, s, 1)
            best = find_pivot(s)
        h.append(A[s][s + 1])
        s += 2
    return SkewDecomposition(x=X, h=h, zeros=r - 2 * len(h))


# ---------------------------------------------------------------------------
# Echelon form over Z_M


def _unit_for(a: int, M: int) -> int:
    """A unit u of Z_M with u*a = gcd(a, M) mod M."""
    g = gcd(a, M)
    Mp = M // g
    u0 = pow(a // g, -1, Mp) if Mp > 1 else 0
    u = u0
    while gcd(u, M) != 1:
        u += Mp
    return u % M if M > 1 else 0


@dataclass
class Echelon:
    """Howell-style echelon generators of a subgroup of Z_M^c."""

    modulus: int
    ncols: int
    pivots: list[tuple[int, int]]  # (column, pivot value g | M)
    rows: np.ndarray  # one row per pivot

    def order(self) -> int:
        out = 1
        for _, g in self.pivots:
            out *= self.modulus // g
        return out

    def reduce(self, v) -> np.ndarray:
        M = self.modulus
        w = np.asarray(v, dtype=np.int64) % M
        for (j, g), row in zip(self.pivots, self.rows):
            x = int(w[j])
            if x:
                if x % g:
                    return w
                w = (w - (x // g) * row) % M
        return w

    def contains(self, v) -> bool:
        return not self.reduce(v).any()


def echelon_mod(A, M: int) -> Echelon:
    """Echelon form over Z_M of the row span of A."""
    if M < 1:
        raise ValueError("modulus must be positive")
    work = np.array(A, dtype=object if M > 2**30 else np.int64)
    if work.ndim == 1:
        work = work.reshape(0, 0) if work.size == 0 else work.reshape(1, -1)
    nrows, ncols = work.shape if work.size else (0, len(A[0]) if len(A) else 0)
    if work.size == 0:
        return Echelon(M, ncols, [], np.zeros((0, ncols), dtype=np.int64))
    work = work % M
    pivots: list[tuple[int, int]] = []
    prow: list[np.ndarray] = []
    for j in range(ncols):
        if work.shape[0] == 0:
            break
        col = work[:, j]
        nz = np.flatnonzero(col)
        while len(nz) > 1:
            p = nz[np.argmin(col[nz])]
            q = col // col[p]
            q[p] = 0
            work = (work - np.outer(q, work[p])) % M
            col = work[:, j]
            nz = np.flatnonzero(col)
        if len(nz) == 0:
            continue
        p = int(nz[0])
        row = work[p]
        a = int(row[j])
        g = gcd(a, M)
        u = _unit_for(a, M)
        row = (row * u) % M
        extra = (row * (M // g)) % M
        keep = np.ones(work.shape[0], dtype=bool)
        keep[p] = False
        work = work[keep]
        if extra.any():
            work = np.vstack([work, extra[None, :]])
        pivots.append((j, g))
        prow.append(row)
    rows = np.array(prow, dtype=work.dtype) if prow else np.zeros((0, ncols), dtype=np.int64)
    return Echelon(M, ncols, pivots, rows)


# ---------------------------------------------------------------------------
# Lattices


@dataclass
class Lattice:
    """Subgroup of Z^r generated by the rows of `generators`.

    If `modulus` is set, the lattice also contains modulus * Z^r; all
    computations then run over Z_modulus.
    """

    generators: Matrix
    ambient_rank: int
    modulus: int | None = None
    _echelon: Echelon | None = field(default=None, repr=False, compare=False)
    _hnf: Matrix | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = [list(map(int, g)) for g in self.generators]
        for g in self.generators:
            if len(g) != self.ambient_rank:
                raise ValueError("generator length differs from ambient rank")
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("modulus must be positive")

    # -- canonical forms
    def echelon(self) -> Echelon:
        if self.modulus is None:
            raise ValueError("echelon form needs a modulus")
        if self._echelon is None:
            gens = self.generators or [[0] * self.ambient_rank]
            self._echelon = echelon_mod(gens, self.modulus)
        return self._echelon

    def hermite(self) -> Matrix:
        if self._hnf is None:
            gens = list(self.generators)
            if self.modulus is not None:
                gens += [[self.modulus * int(i == j) for j in range(self.ambient_rank)]
                         for i in range(self.ambient_rank)]
            self._hnf = hnf(gens) if gens else []
        return self._hnf

    # -- queries
    def rank(self) -> int:
        if self.modulus is not None:
            return self.ambient_rank
        return len(self.hermite())

    def index(self):
        if self.modulus is not None:
            E = self.echelon()
            out = self.modulus ** (self.ambient_rank - len(E.pivots))
            for _, g in E.pivots:
                out *= g
            return out
        H = self.hermite()
        if len(H) < self.ambient_rank:
            return INFINITE
        out = 1
        for k, row in enumerate(H):
            out *= next(x for x in row if x)
        return out

    def contains(self, v) -> bool:
        if len(v) != self.ambient_rank:
            raise ValueError("vector length differs from ambient rank")
        if self.modulus is not None:
            return self.echelon().contains(v)
        w = list(map(int, v))
        for row in self.hermite():
            j = next(i for i, x in enumerate(row) if x)
            if w[j] % row[j]:
                return False
            q = w[j] // row[j]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return not any(w)

    __contains__ = contains

    def contains_lattice(self, other: "Lattice") -> bool:
        if other.ambient_rank != self.ambient_rank:
            return False
        if not all(self.contains(g) for g in other.generators):
            return False
        if other.modulus is not None:
            M = other.modulus
            if self.modulus is not None and self.modulus != 0 and M % self.modulus == 0:
                return True
            return all(self.contains([M * int(i == j) for j in range(self.ambient_rank)])
                       for i in range(self.ambient_rank))
        return True

    def equals(self, other: "Lattice") -> bool:
        return self.contains_lattice(other) and other.contains_lattice(self)

    # -- constructions
    def __add__(self, other: "Lattice") -> "Lattice":
        if other.ambient_rank != self.ambient_rank:
            raise ValueError("ambient ranks differ")
        if self.modulus is not None and other.modulus is not None:
            M = gcd(self.modulus, other.modulus)
        else:
            M = self.modulus if self.modulus is not None else other.modulus
        return Lattice(self.generators + other.generators, self.ambient_rank, M)

    def with_modulus(self, M: int) -> "Lattice":
        """Same lattice, re-expressed over Z_M for a multiple M of the modulus."""
        if self.modulus is None or M % self.modulus:
            raise ValueError("new modulus must be a multiple of the old one")
        r = self.ambient_rank
        gens = self.generators + [[self.modulus * int(i == j) for j in range(r)] for i in range(r)]
        return Lattice(gens, r, M)

    def intersection(self, other: "Lattice") -> "Lattice":
        if self.modulus is None or other.modulus is None:
            raise ValueError("intersection needs both lattices to have a modulus")
        r = self.ambient_rank
        M = lcm(self.modulus, other.modulus)
        g1 = self.with_modulus(M).generators
        g2 = other.with_modulus(M).generators
        rows = [g + g for g in g1] + [g + [0] * r for g in g2]
        E = echelon_mod(rows, M)
        gens = [[int(x) for x in row[r:]] for (j, _), row in zip(E.pivots, E.rows) if j >= r]
        return Lattice(gens, r, M)

    def scaled(self, c: int) -> "Lattice":
        M = None if self.modulus is None else self.modulus * c
        return Lattice([[c * x for x in g] for g in self.generators], self.ambient_rank, M)

    def basis_mod(self) -> Matrix:
        return [[int(x) for x in row] for row in self.echelon().rows]


def lattice_from_rows(rows: Iterable[Sequence[int]], r: int, modulus: int | None = None) -> Lattice:
    return Lattice([list(x) for x in rows], r, modulus)


def kernel_mod(M, N: int) -> Lattice:
    """All k in Z^r with k M = 0 mod N, as a lattice containing N Z^r."""
    A = to_rows(M)
    r = len(A)
    s = len(A[0]) if r else 0
    if N < 1:
        raise ValueError("N must be positive")
    if s == 0:
        return Lattice(identity(r), r, N)
    rows = [A[i] + [int(i == j) for j in range(r)] for i in range(r)]
    E = echelon_mod(rows, N)
    gens = [[int(x) for x in row[s:]] for (j, _), row in zip(E.pivots, E.rows) if j >= s]
    return Lattice(gens, r, N)


def kernel_mod_snf(M, N: int) -> Lattice:
    """Same lattice as kernel_mod, computed from the integer Smith form."""
    A = to_rows(M)
    r = len(A)
    if r == 0:
        return Lattice([], 0, N)
    U, D, _ = snf(A)
    gens = []
    for i in range(r):
        d = D[i][i] if i < len(D[0]) else 0
        c = N // gcd(N, d)
        gens.append([c * x for x in U[i]])
    return Lattice(gens, r, N)


def congruence_lattice(conditions: Sequence[tuple[Sequence[int], int]], r: int) -> Lattice:
    """Lattice of k in Z^r with k . a = 0 mod M for each (a, M)."""
    conditions = [(list(a), int(M)) for a, M in conditions if M != 1]
    if not conditions:
        return Lattice(identity(r), r, 1)
    L = 1
    for _, M in conditions:
        L = lcm(L, M)
    cols = [[(L // M) * x for x in a] for a, M in conditions]
    return kernel_mod(transpose(cols), L)


def index(L: Lattice):
    return L.index()


def quotient_order(L1: Lattice, L2: Lattice) -> int:
    """|L1 / L2| for L2 contained in L1 with finite quotient."""
    if not L1.contains_lattice(L2):
        raise ValueError("second lattice is not contained in the first")
    i1, i2 = L1.index(), L2.index()
    if i2 == INFINITE:
        if i1 == INFINITE:
            if L1.rank() == L2.rank():
                H1, H2 = L1.hermite(), L2.hermite()
                # equal rank: compare covolumes inside the common span
                return _covolume(H2) // _covolume(H1)
        raise ValueError("infinite quotient")
    if i1 == INFINITE:
        raise ValueError("infinite quotient")
    return i2 // i1


def _covolume(H: Matrix) -> int:
    inv = [x for x in smith_invariants(H) if x]
    out = 1
    for x in inv:
        out *= x
    # the Smith product of a basis equals its covolume times the saturation
    # index; both lattices share the saturation so the ratio is correct
    return out


# ---------------------------------------------------------------------------
# Weight lattice pairings


def weight_pairing(i: int, j: int, n: int) -> Fraction:
    """<w_i, w_j> = delta_ij - 1/n for the weights of the vector representation."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("weight indices must lie in 1..n")
    return Fraction(int(i == j)) - Fraction(1, n)


def varpi_pairing(i: int, i2: int, n: int) -> Fraction:
    """<varpi_i, varpi_i'> = min(i, i') - i i'/n for fundamental weights."""
    if not (1 <= i <= n - 1 and 1 <= i2 <= n - 1):
        raise ValueError("fundamental weight indices must lie in 1..n-1")
    return Fraction(min(i, i2)) - Fraction(i * i2, n)


# ---------------------------------------------------------------------------
# Labelled dense integer matrices

_INT64_SAFE = 2**62


def int_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product; int64 when the entry bound allows it, else Python ints."""
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch in matrix product")
    if A.size == 0 or B.size == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    a = int(np.max(np.abs(A.astype(object)))) if A.dtype == object else int(np.max(np.abs(A)))
    b = int(np.max(np.abs(B.astype(object)))) if B.dtype == object else int(np.max(np.abs(B)))
    if a * b * A.shape[1] < _INT64_SAFE:
        return A.astype(np.int64) @ B.astype(np.int64)
    return A.astype(object) @ B.astype(object)


@dataclass
class IntMatrix:
    """Integer matrix with row and column labels."""

    data: np.ndarray
    rows: list
    cols: list

    def __post_init__(self):
        self.data = np.asarray(self.data)
        if self.data.dtype != object:
            self.data = self.data.astype(np.int64)
        if self.data.shape != (len(self.rows), len(self.cols)):
            raise ValueError("label counts do not match the matrix shape")

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def row_index(self) -> dict:
        return {v: i for i, v in enumerate(self.rows)}

    def col_index(self) -> dict:
        return {v: i for i, v in enumerate(self.cols)}

    def __getitem__(self, key):
        r, c = key
        return int(self.data[self.row_index()[r], self.col_index()[c]])

    def restrict(self, rows: Sequence, cols: Sequence) -> "IntMatrix":
        ri, ci = self.row_index(), self.col_index()
        try:
            ridx = [ri[v] for v in rows]
            cidx = [ci[v] for v in cols]
        except KeyError as exc:
            raise KeyError(f"unknown vertex {exc.args[0]!r}") from exc
        return IntMatrix(self.data[np.ix_(ridx, cidx)] if ridx and cidx
                         else np.zeros((len(ridx), len(cidx)), dtype=np.int64),
                         list(rows), list(cols))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if list(self.cols) != list(other.rows):
            raise ValueError("inner labels differ in matrix product")
        return IntMatrix(int_matmul(self.data, other.data), self.rows, other.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.data.T.copy(), self.cols, self.rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def tolist(self) -> Matrix:
        return [[int(x) for x in row] for row in self.data.tolist()]

    def dump(self, label=str) -> str:
        """Text dump: a header of column labels, then one labelled row per line."""
        lines = ["\t" + "\t".join(label(c) for c in self.cols)]
        for v, row in zip(self.rows, self.data.tolist()):
            lines.append(label(v) + "\t" + "\t".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"

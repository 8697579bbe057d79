"""Cellular cochains of the compactified surface and the map J.

The triangulation gives a cell structure on the compactified surface:
punctures are 0-cells, edges are 1-cells and faces are 2-cells.  Boundary
edges carry the boundary orientation, interior edges their intrinsic one.
Cochain groups over Z_k are handled as lattices in Z^E containing k Z^E.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .center import RootParams, TorusData, balanced_lattice
from .surface import Triangulation
from .zlattice import Lattice, kernel_mod


@dataclass
class CWComplex:
    triangulation: Triangulation
    edges: list[str]
    d0: np.ndarray  # edges x punctures: (d0 f)(e) = f(head) - f(tail)
    d1: np.ndarray  # faces x edges
    boundary_edge_set: frozenset[str]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.edges)}


def cw_complex(T: Triangulation) -> CWComplex:
    edges = T.edge_ids
    idx = {e: i for i, e in enumerate(edges)}
    d0 = np.zeros((len(edges), T.num_punctures), dtype=np.int64)
    for e in edges:
        tail, head = T.endpoints(e)
        d0[idx[e], head] += 1
        d0[idx[e], tail] -= 1
    d1 = np.zeros((len(T.faces), len(edges)), dtype=np.int64)
    for f, face in enumerate(T.faces):
        for e, flip in zip(face.edges, face.flips):
            d1[f, idx[e]] += -1 if flip else 1
    return CWComplex(T, edges, d0, d1, frozenset(T.boundary_edges))


def group_order(L: Lattice) -> int:
    """Order of L / (modulus Z^r), that is, of L viewed inside Z_modulus^r."""
    return L.modulus ** L.ambient_rank // L.index()


def cocycles(C: CWComplex, k: int) -> Lattice:
    """Z^1(Z_k) as a lattice in Z^E containing k Z^E."""
    if k == 1:
        return Lattice([], C.num_edges, 1)
    return kernel_mod(C.d1.T.tolist(), k)


def coboundaries(C: CWComplex, k: int) -> Lattice:
    return Lattice([[int(x) % k for x in col] for col in C.d0.T.tolist()], C.num_edges, k)


def h1_order(C: CWComplex, k: int = 2) -> int:
    """|H^1(Z_k)|; over Z_2 this is also |H_1(Z_2)|."""
    return group_order(cocycles(C, k)) // group_order(coboundaries(C, k))


def multiples(C: CWComplex, n: int, l: int) -> Lattice:
    """l C^1(Z_n)."""
    return Lattice([[l * int(i == j) for j in range(C.num_edges)] for i in range(C.num_edges)],
                   C.num_edges, n)


def boundary_multiples(C: CWComplex, n: int, d: int) -> Lattice:
    """Cochains whose value on every boundary edge is a multiple of d in Z_n."""
    gens = [[(d if e in C.boundary_edge_set else 1) * int(i == j) for j in range(C.num_edges)]
            for i, e in enumerate(C.edges)]
    return Lattice(gens, C.num_edges, n)


@dataclass
class CocycleSubgroups:
    cocycles: Lattice
    cocycles_l: Lattice
    boundary_d: Lattice
    intersection: Lattice

    def orders(self) -> dict[str, int]:
        return {k: group_order(getattr(self, k))
                for k in ("cocycles", "cocycles_l", "boundary_d", "intersection")}


def cocycle_subgroups(C: CWComplex, n: int, l: int, d: int) -> CocycleSubgroups:
    Z = cocycles(C, n)
    Zl = Z.intersection(multiples(C, n, l))
    Cd = boundary_multiples(C, n, d)
    return CocycleSubgroups(Z, Zl, Cd, Zl.intersection(Cd))


class BalanceError(ValueError):
    pass


def _edge_vertices(data: TorusData) -> dict[str, list[int]]:
    """k-space coordinates of v_1 .. v_{n-1} on each edge of the base triangulation."""
    vs = data.A.vs_star
    pos = {v: i for i, v in enumerate(vs.v_x)}
    out: dict[str, list[int]] = {}
    for e in data.A.vs_bar.triangulation.edge_ids:
        out[e] = [pos[("e", e, p)] for p in range(1, data.n)]
    return out


def j_map(k, C: CWComplex, data: TorusData) -> list[int]:
    """The cochain s with s_e (1, 2, ..., n-1) = (k(v_1^e), ..., k(v_{n-1}^e)) in Z_n."""
    n, verts = data.n, _edge_vertices(data)
    out = []
    for e in C.edges:
        values = [int(k[c]) % n for c in verts[e]]
        s = values[0]
        if any((s * (p + 1) - v) % n for p, v in enumerate(values)):
            raise BalanceError(f"edge {e}: {values} is not a multiple of (1, ..., n-1) mod n")
        out.append(s)
    return out


def j_image(L: Lattice, C: CWComplex, data: TorusData) -> Lattice:
    """J applied to a k-space lattice, as a subgroup of C^1(Z_n)."""
    gens = list(L.generators)
    if L.modulus is not None:
        r = L.ambient_rank
        gens += [[L.modulus * int(i == j) for j in range(r)] for i in range(r)]
    return Lattice([j_map(g, C, data) for g in gens], C.num_edges, data.n)


def divisible_balanced(data: TorusData, p: RootParams) -> Lattice:
    """Balanced vectors divisible by m*."""
    r = data.k_rank
    return balanced_lattice(data).intersection(Lattice([], r, p.m_star))


def exact_sequence_orders(data: TorusData, C: CWComplex, p: RootParams) -> tuple[int, int]:
    """(|Lambda cap m* Z^V / N Z^V|, |Z^1(Z_n)_{d*}|) for m' even."""
    meet = divisible_balanced(data, p)
    left = p.N ** data.k_rank // meet.index()
    right = group_order(cocycle_subgroups(C, data.n, p.d_star, p.d).cocycles_l)
    return left, right


def cocycle_count_prediction(S, k: int) -> int:
    return k ** S.r


def h1_prediction(S) -> int:
    return 2 ** (2 * S.genus + S.b - 1)


def boundary_cocycle_prediction(S, n_p: int) -> int:
    return (n_p // 2) ** S.r * h1_prediction(S)


"""Small vertices of the n-triangulation and the quiver matrices.

In a face, the small vertex with barycentric coordinates (i, j, k) sits at
distance i, j, k from the sides opposite corners 0, 1 and 2, so corner c has
coordinate n in position c.  Vertices on a side are shared with the glued
face and are keyed by (edge id, position along the edge's intrinsic
orientation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .surface import ExtendedTriangulation, Triangulation
from .zlattice import IntMatrix

Vertex = tuple
AnyTriangulation = Union[Triangulation, ExtendedTriangulation]

# arrow steps of the small triangles; boundary arrows of a face run clockwise,
# the orientation under which K-bar of one triangle is jk' + ki' + i'j
ARROW_STEPS = ((1, -1, 0), (0, 1, -1), (-1, 0, 1))


class QuiverError(ArithmeticError):
    """An internal identity of the quiver construction failed."""


def face_coordinates(n: int) -> list[tuple[int, int, int]]:
    """Non-corner barycentric coordinates in lexicographic order."""
    return [(i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i)
            if max(i, j, n - i - j) < n]


def side_of(ijk: tuple[int, int, int]) -> tuple[int, int] | None:
    """(slot, counterclockwise position) of a vertex on a side, else None."""
    i, j, k = ijk
    if k == 0:
        return 0, j
    if i == 0:
        return 1, k
    if j == 0:
        return 2, i
    return None


def vertex_key(T: Triangulation, f: int, ijk: tuple[int, int, int], n: int) -> Vertex:
    side = side_of(ijk)
    if side is None:
        return ("f", f) + tuple(ijk)
    s, p = side
    face = T.faces[f]
    return ("e", face.edges[s], n - p if face.flips[s] else p)


def label(v: Vertex) -> str:
    if v[0] == "f":
        return f"f{v[1]}:{v[2]}{v[3]}{v[4]}" if max(v[2:]) < 10 else f"f{v[1]}:{v[2]},{v[3]},{v[4]}"
    return f"{v[1]}@{v[2]}"


@dataclass
class VertexSets:
    """Small vertices of a triangulation with the canonical orderings.

    vbar lists all small vertices: interior ones first in face-major,
    coordinate-lexicographic order of their first incarnation, then the
    boundary vertices.  For an extended triangulation the boundary part is
    W followed by U, v_x = interior + W and v_a = interior + U.  For an ear
    triangulation the boundary part is (W_i, U_i, V_i) per component.
    """

    n: int
    triangulation: Triangulation
    vbar: list[Vertex]
    interior: list[Vertex]
    boundary: list[Vertex]
    incarnations: dict[Vertex, list[tuple[int, tuple[int, int, int]]]]
    w_set: list[Vertex] = field(default_factory=list)
    u_set: list[Vertex] = field(default_factory=list)
    v_x: list[Vertex] = field(default_factory=list)
    v_a: list[Vertex] = field(default_factory=list)
    components: list[dict[str, list[Vertex]]] = field(default_factory=list)

    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vbar)}

    def boundary_edge_of(self, v: Vertex) -> str | None:
        if v[0] == "e" and self.triangulation.is_boundary_edge(v[1]):
            return v[1]
        return None


def _base_triangulation(T: AnyTriangulation) -> Triangulation:
    return T.full if isinstance(T, ExtendedTriangulation) else T


def small_vertices(T: AnyTriangulation, n: int) -> VertexSets:
    if n < 2:
        raise ValueError("n must be at least 2")
    tri = _base_triangulation(T)
    coords = face_coordinates(n)
    incarnations: dict[Vertex, list] = {}
    order: list[Vertex] = []
    for f in range(len(tri.faces)):
        for ijk in coords:
            v = vertex_key(tri, f, ijk, n)
            if v not in incarnations:
                incarnations[v] = []
                order.append(v)
            incarnations[v].append((f, ijk))
    bnd = {v for v in order if v[0] == "e" and tri.is_boundary_edge(v[1])}
    interior = [v for v in order if v not in bnd]
    vs = VertexSets(n, tri, [], interior, [], incarnations)
    if isinstance(T, ExtendedTriangulation) and T.kind == "mu":
        _order_mu(T, vs)
    elif isinstance(T, ExtendedTriangulation):
        _order_extended(T, vs)
    else:
        vs.boundary = [("e", e, p) for comp in tri.boundary for e in comp for p in range(1, n)]
    vs.vbar = vs.interior + vs.boundary
    if sorted(map(repr, vs.boundary)) != sorted(map(repr, bnd)):
        raise QuiverError("boundary vertex ordering does not cover the boundary vertices")
    return vs


def _attached_vertex(T: Triangulation, f: int, ijk, n: int) -> Vertex:
    v = vertex_key(T, f, ijk, n)
    if v[0] != "e":
        raise QuiverError("attached-triangle vertex is not on a side")
    return v


def _order_extended(X: ExtendedTriangulation, vs: VertexSets) -> None:
    n, tri = vs.n, X.full
    b = len(X.base.boundary)
    wkeys, ukeys = [], []
    for (comp, pos), f in X.attached.items():
        i, j = comp + 1, pos + 1
        r_i = len(X.base.boundary[comp])
        for k in range(1, n):
            key = (b - i, r_i - j, n - k)
            wkeys.append((key, _attached_vertex(tri, f, (0, k, n - k), n)))
            ukeys.append((key, _attached_vertex(tri, f, (k, 0, n - k), n)))
    vs.w_set = [v for _, v in sorted(wkeys)]
    vs.u_set = [v for _, v in sorted(ukeys)]
    vs.boundary = vs.w_set + vs.u_set
    vs.v_x = vs.interior + vs.w_set
    vs.v_a = vs.interior + vs.u_set


def _order_mu(X: ExtendedTriangulation, vs: VertexSets) -> None:
    n, tri = vs.n, X.full
    boundary: list[Vertex] = []
    for comp, edges in enumerate(tri.boundary):
        r_i = len(edges)
        wk, uk = [], []
        for (c, pos), f in X.attached.items():
            if c != comp:
                continue
            jw, ju = 2 * pos + 1, 2 * pos + 2
            for k in range(1, n):
                wk.append(((r_i - jw, n - k), _attached_vertex(tri, f, (0, k, n - k), n)))
                uk.append(((r_i - ju, n - k), _attached_vertex(tri, f, (k, 0, n - k), n)))
        W = [v for _, v in sorted(wk)]
        U = [v for _, v in sorted(uk)]
        V: list[Vertex] = []
        if comp in X.odd_edges:
            e = X.odd_edges[comp]
            # a_1 .. a_{n-1} run along the positive orientation of the
            # boundary; the order puts a_{n-1} first
            V = [("e", e, p) for p in range(n - 1, 0, -1)]
        vs.components.append({"W": W, "U": U, "V": V})
        vs.w_set += W
        vs.u_set += U
        boundary += W + U + V
    vs.boundary = boundary


def _face_contributions(n: int):
    """Per-face arrows (coordinate pairs with weights) of the n-triangulation."""
    coords = set(face_coordinates(n))
    out = []
    for v in sorted(coords):
        for d in ARROW_STEPS:
            w = (v[0] + d[0], v[1] + d[1], v[2] + d[2])
            if w in coords:
                same_side = any(v[a] == 0 and w[a] == 0 for a in range(3))
                out.append((v, w, 1 if same_side else 2))
    return out


def q_matrix(T: AnyTriangulation, n: int, vs: VertexSets | None = None) -> IntMatrix:
    """Signed adjacency matrix of the weighted quiver on all small vertices."""
    vs = vs or small_vertices(T, n)
    tri = vs.triangulation
    idx = vs.index()
    Q = np.zeros((len(vs.vbar), len(vs.vbar)), dtype=np.int64)
    arrows = _face_contributions(n)
    for f in range(len(tri.faces)):
        for a, b, wgt in arrows:
            x = idx[vertex_key(tri, f, a, n)]
            y = idx[vertex_key(tri, f, b, n)]
            Q[x, y] += wgt
            Q[y, x] -= wgt
    return IntMatrix(Q, vs.vbar, vs.vbar)


def h_matrix(T: AnyTriangulation, n: int, vs: VertexSets | None = None,
             Q: IntMatrix | None = None) -> IntMatrix:
    vs = vs or small_vertices(T, n)
    Q = Q if Q is not None else q_matrix(T, n, vs)
    q = Q.data
    if (q % 2).any():
        odd = np.argwhere(q % 2)
        edge = [vs.boundary_edge_of(v) for v in vs.vbar]
        for x, y in odd:
            if edge[x] is None or edge[x] != edge[y]:
                raise QuiverError(
                    f"odd quiver entry between {label(vs.vbar[x])} and {label(vs.vbar[y])}")
    H = -(q // 2)
    edge = [vs.boundary_edge_of(v) for v in vs.vbar]
    groups: dict[str, list[int]] = {}
    for i, e in enumerate(edge):
        if e is not None:
            groups.setdefault(e, []).append(i)
    for members in groups.values():
        for x in members:
            for y in members:
                if x == y:
                    H[x, y] = 1
                elif q[x, y] > 0:
                    H[x, y] = -1
                else:
                    H[x, y] = 0
    return IntMatrix(H, vs.vbar, vs.vbar)


def restrict(M: IntMatrix, rows, cols) -> IntMatrix:
    return M.restrict(rows, cols)


def projection_vectors(vs: VertexSets, f: int) -> list[dict[Vertex, int]]:
    """The three coordinate functions of face f, zero elsewhere."""
    out: list[dict[Vertex, int]] = [{}, {}, {}]
    for v, incs in vs.incarnations.items():
        for face, ijk in incs:
            if face == f:
                for a in range(3):
                    out[a][v] = out[a].get(v, 0) + ijk[a]
    return out

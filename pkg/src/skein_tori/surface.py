"""Punctured bordered surfaces and their ideal triangulations.

A triangulation is stored as glued triangles.  Slot s of a face runs from
corner s to corner s+1 in counterclockwise order, so slot 0 joins corners
0 and 1, slot 1 joins corners 1 and 2 and slot 2 joins corners 2 and 0.
Every edge carries an intrinsic orientation; a slot's flip is True when
that orientation runs against the face's counterclockwise direction.
Interior edges fill two slots with opposite flips.  Boundary edges fill one
slot with flip False, so the boundary is oriented with the surface on its
left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Sequence


class TriangulationError(ValueError):
    """Raised for gluing data that does not describe a valid triangulation."""


@dataclass(frozen=True)
class Surface:
    """Compact oriented surface of genus g with punctures on its boundary."""

    genus: int
    punctures: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise TriangulationError("genus must be non-negative")
        if not self.punctures:
            raise TriangulationError(
                "surface needs at least one boundary component to be triangulable "
                "without interior punctures")
        if any(r < 1 for r in self.punctures):
            raise TriangulationError("every boundary component needs at least one puncture")
        if self.boundary_punctures <= 2 * self.euler_characteristic:
            raise TriangulationError(
                "surface is not triangulable: the face count #punctures - 2*chi must be "
                "positive (monogons and bigons are excluded)")

    @property
    def b(self) -> int:
        return len(self.punctures)

    @property
    def t(self) -> int:
        return sum(1 for r in self.punctures if r % 2 == 0)

    @property
    def boundary_punctures(self) -> int:
        return sum(self.punctures)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.b

    @property
    def r(self) -> int:
        """#boundary punctures minus Euler characteristic, i.e. #edges - #faces."""
        return self.boundary_punctures - self.euler_characteristic

    @property
    def num_faces(self) -> int:
        return self.boundary_punctures - 2 * self.euler_characteristic

    def w_size(self, n: int) -> int:
        return (n - 1) * self.boundary_punctures

    def v_size(self, n: int) -> int:
        return (n * n - 1) * self.r

    def vbar_size(self, n: int) -> int:
        return (n * n - 1) * self.r - n * (n - 1) // 2 * self.boundary_punctures

    def as_dict(self) -> dict:
        return {"genus": self.genus, "punctures": list(self.punctures)}


def build_surface(g: int, punctures: Sequence[int]) -> Surface:
    return Surface(int(g), tuple(int(r) for r in punctures))


@dataclass(frozen=True)
class Face:
    edges: tuple[str, str, str]
    flips: tuple[bool, bool, bool]


@dataclass
class Triangulation:
    """Validated gluing data.

    boundary[i] lists the boundary edge ids of component i in the positive
    orientation.  Derived incidence is filled in by the validator.
    """

    surface: Surface
    faces: list[Face]
    boundary: list[list[str]]
    slots: dict[str, list[tuple[int, int]]] = field(default_factory=dict, repr=False)
    puncture_of_corner: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)
    num_punctures: int = 0

    @property
    def edge_ids(self) -> list[str]:
        return list(self.slots)

    def is_boundary_edge(self, e: str) -> bool:
        return len(self.slots[e]) == 1

    @property
    def interior_edges(self) -> list[str]:
        return [e for e, s in self.slots.items() if len(s) == 2]

    @property
    def boundary_edges(self) -> list[str]:
        return [e for comp in self.boundary for e in comp]

    def boundary_position(self, e: str) -> tuple[int, int]:
        """(component index, position) of a boundary edge, both 0-based."""
        for i, comp in enumerate(self.boundary):
            if e in comp:
                return i, comp.index(e)
        raise KeyError(e)

    def endpoints(self, e: str) -> tuple[int, int]:
        """(tail, head) punctures of an edge along its intrinsic orientation."""
        f, s = self.slots[e][0]
        a = self.puncture_of_corner[(f, s)]
        b = self.puncture_of_corner[(f, (s + 1) % 3)]
        return (b, a) if self.faces[f].flips[s] else (a, b)

    def glued(self, f: int, s: int) -> tuple[int, int] | None:
        e = self.faces[f].edges[s]
        for slot in self.slots[e]:
            if slot != (f, s):
                return slot
        return None

    def to_spec(self) -> dict:
        return {
            "surface": self.surface.as_dict(),
            "faces": [{"edges": list(f.edges), "flips": list(f.flips)} for f in self.faces],
            "boundary": [{"component": i, "edges_ccw": list(c)} for i, c in enumerate(self.boundary)],
        }


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _next_boundary_edge(faces: list[Face], slots, f: int, s: int) -> str:
    """Boundary edge following the boundary edge in slot s of face f."""
    c = (s + 1) % 3
    for _ in range(3 * len(faces) + 3):
        e = faces[f].edges[c]
        if len(slots[e]) == 1:
            return e
        f2, s2 = next(x for x in slots[e] if x != (f, c))
        f, c = f2, (s2 + 1) % 3
    raise TriangulationError("corner walk did not terminate; interior puncture present")


def boundary_cycles(faces: list[Face], slots) -> list[list[str]]:
    """Boundary edges grouped into cycles, each in the positive orientation.

    Cycles start from the first boundary edge met in face order.
    """
    order = [e for f in faces for e in f.edges if len(slots[e]) == 1]
    seen: set[str] = set()
    cycles = []
    for e0 in order:
        if e0 in seen:
            continue
        cyc = [e0]
        seen.add(e0)
        f, s = slots[e0][0]
        while True:
            e = _next_boundary_edge(faces, slots, f, s)
            if e == e0:
                break
            if e in seen:
                raise TriangulationError("boundary walk revisits an edge")
            cyc.append(e)
            seen.add(e)
            f, s = slots[e][0]
        cycles.append(cyc)
    return cycles


def _rotation_equal(a: list[str], b: list[str]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    return b[k:] + b[:k] == a


def validate(faces: list[Face], boundary: list[list[str]] | None,
             declared: Surface | None) -> Triangulation:
    """Check gluing data and compute the surface it triangulates."""
    if not faces:
        raise TriangulationError("triangulation has no faces")
    slots: dict[str, list[tuple[int, int]]] = {}
    for fi, face in enumerate(faces):
        if len(face.edges) != 3 or len(face.flips) != 3:
            raise TriangulationError(f"face {fi} must have exactly 3 edges and 3 flips")
        if len(set(face.edges)) != 3:
            raise TriangulationError(f"face {fi} is self-folded (an edge fills two of its slots)")
        for s, e in enumerate(face.edges):
            slots.setdefault(e, []).append((fi, s))
    for e, occ in slots.items():
        if len(occ) not in (1, 2):
            raise TriangulationError(f"edge {e!r} is used {len(occ)} times; must be 1 or 2")
        if len(occ) == 2:
            (f1, s1), (f2, s2) = occ
            if faces[f1].flips[s1] == faces[f2].flips[s2]:
                raise TriangulationError(
                    f"edge {e!r} is glued orientation-preservingly (non-orientable gluing)")
        else:
            f1, s1 = occ[0]
            if faces[f1].flips[s1]:
                raise TriangulationError(
                    f"boundary edge {e!r} must follow the face's counterclockwise direction")
    # connectivity of the dual graph
    uf = _UnionFind()
    for fi in range(len(faces)):
        uf.find(fi)
    for occ in slots.values():
        if len(occ) == 2:
            uf.union(occ[0][0], occ[1][0])
    if len({uf.find(fi) for fi in range(len(faces))}) != 1:
        raise TriangulationError("glued complex is disconnected")
    # punctures as corner classes
    cu = _UnionFind()
    for fi in range(len(faces)):
        for c in range(3):
            cu.find((fi, c))
    for occ in slots.values():
        if len(occ) == 2:
            (f1, s1), (f2, s2) = occ
            cu.union((f1, s1), (f2, (s2 + 1) % 3))
            cu.union((f1, (s1 + 1) % 3), (f2, s2))
    roots = sorted({cu.find((fi, c)) for fi in range(len(faces)) for c in range(3)})
    index = {r: i for i, r in enumerate(roots)}
    corner = {(fi, c): index[cu.find((fi, c))] for fi in range(len(faces)) for c in range(3)}
    on_boundary = set()
    for e, occ in slots.items():
        if len(occ) == 1:
            f, s = occ[0]
            on_boundary.add(corner[(f, s)])
            on_boundary.add(corner[(f, (s + 1) % 3)])
    if len(on_boundary) != len(roots):
        raise TriangulationError("triangulation has an interior puncture")
    cycles = boundary_cycles(faces, slots)
    if boundary is None:
        boundary = cycles
    else:
        listed = [e for c in boundary for e in c]
        if sorted(listed) != sorted(e for e, o in slots.items() if len(o) == 1):
            raise TriangulationError("declared boundary edges differ from the edges used once")
        for comp in boundary:
            if not any(_rotation_equal(comp, c) for c in cycles):
                raise TriangulationError(
                    f"declared boundary component {comp} is not a boundary cycle in positive order")
    V, E, F, b = len(roots), len(slots), len(faces), len(boundary)
    twice_g = 2 - b - V + E - F
    if twice_g < 0 or twice_g % 2:
        raise TriangulationError("Euler characteristic is inconsistent with an orientable surface")
    computed = Surface(twice_g // 2, tuple(len(c) for c in boundary))
    if declared is not None and declared != computed:
        raise TriangulationError(
            f"declared surface {declared.as_dict()} differs from computed {computed.as_dict()}")
    return Triangulation(computed, list(faces), [list(c) for c in boundary], slots, corner, V)


def load_triangulation(spec: Mapping[str, Any] | str | Path) -> Triangulation:
    """Build a triangulation from a spec document, a JSON string or a file path."""
    if isinstance(spec, Path) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        spec = json.loads(Path(spec).read_text())
    elif isinstance(spec, str):
        spec = json.loads(spec)
    try:
        faces = [Face(tuple(str(e) for e in f["edges"]), tuple(bool(x) for x in f["flips"]))
                 for f in spec["faces"]]
    except (KeyError, TypeError) as exc:
        raise TriangulationError(f"malformed face list: {exc}") from exc
    declared = None
    if "surface" in spec:
        s = spec["surface"]
        declared = build_surface(s.get("genus", 0), s.get("punctures", []))
    boundary = None
    if "boundary" in spec:
        comps = sorted(spec["boundary"], key=lambda c: c["component"])
        boundary = [[str(e) for e in c["edges_ccw"]] for c in comps]
    return validate(faces, boundary, declared)


# ---------------------------------------------------------------------------
# Builders


def polygon_word_fan(sides: Sequence[tuple[str, bool]], chord_prefix: str = "d") -> list[Face]:
    """Fan triangulation from vertex 0 of a polygon with the given sides.

    sides[j] = (edge id, flip) for the side from vertex j to vertex j+1.
    """
    N = len(sides)
    if N < 3:
        raise TriangulationError("a polygon needs at least 3 sides")
    faces = []
    for j in range(1, N - 1):
        s0 = sides[0] if j == 1 else (f"{chord_prefix}{j}", False)
        s1 = sides[j]
        s2 = sides[N - 1] if j + 1 == N - 1 else (f"{chord_prefix}{j + 1}", True)
        faces.append(Face((s0[0], s1[0], s2[0]), (s0[1], s1[1], s2[1])))
    return faces


def polygon(k: int) -> Triangulation:
    faces = polygon_word_fan([(f"c{i + 1}", False) for i in range(k)])
    return validate(faces, [[f"c{i + 1}" for i in range(k)]], build_surface(0, [k]))


def genus(g: int, r: int) -> Triangulation:
    """Genus g with one boundary component carrying r punctures."""
    if g < 1:
        return polygon(r)
    sides: list[tuple[str, bool]] = []
    for i in range(g):
        a, b = f"a{i + 1}", f"b{i + 1}"
        sides += [(a, False), (b, False), (a, True), (b, True)]
    sides += [(f"c{i + 1}", False) for i in range(r)]
    faces = polygon_word_fan(sides)
    return validate(faces, [[f"c{i + 1}" for i in range(r)]], build_surface(g, [r]))


def annulus(r1: int, r2: int) -> Triangulation:
    """Annulus with r1 punctures on the outer and r2 on the inner component."""
    if r1 < 1 or r2 < 1:
        raise TriangulationError("each annulus component needs at least one puncture")
    A = [f"A{k}" for k in range(r2 + 1)]
    B = [A[r2]] + [f"B{j}" for j in range(1, r1)] + [A[0]]
    faces = []
    for k in range(r2):
        faces.append(Face((A[k], f"In{k}", A[k + 1]), (False, False, True)))
    for j in range(r1):
        faces.append(Face((B[j + 1], f"Out{j}", B[j]), (True, False, False)))
    outer = [f"Out{j}" for j in reversed(range(r1))]
    inner = [f"In{k}" for k in range(r2)]
    return validate(faces, [outer, inner], build_surface(0, [r1, r2]))


def builtin(name: str) -> Triangulation:
    """Parse names polygon:k, annulus:r1,r2 and genus:g,r."""
    try:
        kind, _, args = name.partition(":")
        vals = [int(x) for x in args.split(",")] if args else []
        if kind == "polygon" and len(vals) == 1:
            return polygon(vals[0])
        if kind == "annulus" and len(vals) == 2:
            return annulus(*vals)
        if kind == "genus" and len(vals) == 2:
            return genus(*vals)
    except ValueError as exc:
        if isinstance(exc, TriangulationError):
            raise
        raise TriangulationError(f"bad builtin surface name {name!r}") from exc
    raise TriangulationError(f"unknown builtin surface {name!r}")


def base_for(g: int, punctures: Sequence[int]) -> Triangulation:
    """Builtin triangulation for a surface of the shapes the builders cover."""
    punctures = list(punctures)
    if len(punctures) == 1:
        return genus(g, punctures[0]) if g else polygon(punctures[0])
    if len(punctures) == 2 and g == 0:
        return annulus(*punctures)
    raise TriangulationError(f"no builtin triangulation for genus {g} with punctures {punctures}")


# ---------------------------------------------------------------------------
# Attached triangles


@dataclass
class ExtendedTriangulation:
    """A triangulation together with triangles attached to some boundary edges.

    attached maps (component, position) of a base boundary edge, both
    0-based, to the index of its attached face in `full`.  In an attached
    face, slot 0 is the attaching edge, slot 1 carries the w vertices and
    slot 2 the u vertices.
    """

    base: Triangulation
    full: Triangulation
    attached: dict[tuple[int, int], int]
    odd_edges: dict[int, str] = field(default_factory=dict)
    kind: str = "extended"

    def restrict(self) -> Triangulation:
        keep = set(range(len(self.full.faces))) - set(self.attached.values())
        faces = [f for i, f in enumerate(self.full.faces) if i in keep]
        return validate(faces, self.base.boundary, self.base.surface)


def _attach(T: Triangulation, which: Sequence[tuple[int, int]]) -> tuple[list[Face], dict]:
    faces = list(T.faces)
    attached = {}
    for comp, pos in which:
        e = T.boundary[comp][pos]
        attached[(comp, pos)] = len(faces)
        faces.append(Face((e, f"{e}~w", f"{e}~u"), (True, False, False)))
    return faces, attached


def attach_triangles(T: Triangulation) -> ExtendedTriangulation:
    """Attach one triangle to every boundary edge."""
    which = [(i, j) for i, comp in enumerate(T.boundary) for j in range(len(comp))]
    faces, attached = _attach(T, which)
    boundary = [[x for e in comp for x in (f"{e}~w", f"{e}~u")] for comp in T.boundary]
    full = validate(faces, boundary, build_surface(T.surface.genus,
                                                   [2 * r for r in T.surface.punctures]))
    return ExtendedTriangulation(T, full, attached)


def build_mu_triangulation(S: Surface, interior_choice: str | Triangulation = "fan"
                           ) -> ExtendedTriangulation:
    """Triangulation with ear triangles along every boundary component.

    On a component with r punctures p_1..p_r and edges e_1..e_r, the ear k
    is cut off by an arc from p_{2k-1} to p_{2k+1} and has e_{2k-1} as its
    w side and e_{2k} as its u side.  For odd r the edge e_r is left over
    and stays in a base triangle.  The surface left after removing the ears
    has ceil(r/2) punctures on that component; interior_choice is either
    "fan" for the builtin triangulation of it or an explicit Triangulation.
    """
    reduced = [(r + 1) // 2 for r in S.punctures]
    if S.genus == 0 and S.b == 1 and S.punctures[0] in (3, 4):
        return _mu_small_disc(S.punctures[0])
    if S.genus == 0 and S.b == 1 and S.punctures[0] < 3:
        raise TriangulationError("a disc needs at least 3 punctures")
    if isinstance(interior_choice, Triangulation):
        base = interior_choice
        if base.surface != build_surface(S.genus, reduced):
            raise TriangulationError("interior choice does not triangulate the surface left by the ears")
    elif interior_choice == "fan":
        base = base_for(S.genus, reduced)
    else:
        raise TriangulationError(f"unknown interior choice {interior_choice!r}")
    which = []
    odd_edges = {}
    for i, r in enumerate(S.punctures):
        for k in range(r // 2):
            which.append((i, k))
        if r % 2:
            odd_edges[i] = base.boundary[i][-1]
    faces, attached = _attach(base, which)
    boundary = []
    for i, r in enumerate(S.punctures):
        comp = []
        for k in range(r // 2):
            e = base.boundary[i][k]
            comp += [f"{e}~w", f"{e}~u"]
        if r % 2:
            comp.append(odd_edges[i])
        boundary.append(comp)
    full = validate(faces, boundary, S)
    return ExtendedTriangulation(base, full, attached, odd_edges, kind="mu")


def _mu_small_disc(r: int) -> ExtendedTriangulation:
    if r == 3:
        face = Face(("e3", "e1", "e2"), (False, False, False))
        full = validate([face], [["e1", "e2", "e3"]], build_surface(0, [3]))
        return ExtendedTriangulation(full, full, {(0, 0): 0}, {0: "e3"}, kind="mu")
    faces = [Face(("d", "e1", "e2"), (True, False, False)),
             Face(("d", "e3", "e4"), (False, False, False))]
    full = validate(faces, [["e1", "e2", "e3", "e4"]], build_surface(0, [4]))
    return ExtendedTriangulation(full, full, {(0, 0): 0, (0, 1): 1}, kind="mu")

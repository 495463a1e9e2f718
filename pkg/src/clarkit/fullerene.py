"""Validated fullerene graphs, spiral codes and canonical forms.

A fullerene is a cubic 3-connected plane graph with exactly 12 pentagonal
faces and hexagonal faces otherwise.  The face spiral is both the
constructive encoding (windup) and, minimised over all starts and both
senses, the isomorphism certificate for every graph in the supported
range n <= 120 (unspiralable fullerenes only exist from n = 380 up).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import spiral as sp
from .errors import (
    BadFaceSizes,
    NotThreeConnected,
    ParseError,
    WrongPentagonCount,
)
from .rotation import (
    Edge,
    FaceSet,
    RotationSystem,
    edge_key,
    is_three_connected,
    trace_faces,
)


@dataclass(frozen=True)
class SpiralSequence:
    """Face sizes in spiral order; 12 fives, rest sixes."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (5, 6) for s in self.sizes):
            raise BadFaceSizes(f"spiral entries must be 5 or 6: {self.sizes}")
        if sum(1 for s in self.sizes if s == 5) != 12:
            raise WrongPentagonCount(
                f"spiral must contain exactly twelve 5s: {self.sizes}"
            )

    @property
    def n(self) -> int:
        return 2 * (len(self.sizes) - 2)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.sizes)

    @classmethod
    def parse(cls, text: str) -> "SpiralSequence":
        try:
            sizes = tuple(int(tok) for tok in text.strip().split(","))
        except ValueError as exc:
            raise ParseError(f"bad spiral literal: {text!r}") from exc
        return cls(sizes)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically minimal spiral; equal forms iff isomorphic."""

    spiral: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.spiral)


@dataclass(frozen=True)
class Fullerene:
    """Validated fullerene graph plus its precomputed face structure."""

    rot: RotationSystem
    faces: FaceSet
    pentagon_ids: tuple[int, ...]
    hexagon_ids: tuple[int, ...]
    face_adjacency: tuple[tuple[int, ...], ...]
    vertex_faces: tuple[tuple[int, int, int], ...]
    edge_faces: dict[Edge, tuple[int, int]] = field(compare=False, repr=False)
    _canonical: list = field(
        default_factory=list, compare=False, repr=False, hash=False
    )

    @property
    def n(self) -> int:
        return self.rot.n

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def face_vertices(self, face_id: int) -> tuple[int, ...]:
        return self.faces.faces[face_id]

    def face_size(self, face_id: int) -> int:
        return len(self.faces.faces[face_id])

    def edges(self) -> list[Edge]:
        return self.rot.edges()

    def dual(self) -> sp.DualGraph:
        sizes = tuple(self.faces.sizes)
        adj = tuple(frozenset(a) for a in self.face_adjacency)
        third: dict[tuple[int, int], list[int]] = {}
        for triple in self.vertex_faces:
            a, b, c = triple
            for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                key = (u, v) if u < v else (v, u)
                third.setdefault(key, []).append(w)
        return sp.DualGraph(
            sizes, adj, {k: tuple(sorted(v)) for k, v in third.items()}
        )


def _face_structure(rot: RotationSystem, faces: FaceSet):
    """Edge->faces map, per-vertex face triples and cyclic face adjacency."""
    edge_faces: dict[Edge, list[int]] = {}
    for fid, cyc in enumerate(faces.faces):
        k = len(cyc)
        for i in range(k):
            edge_faces.setdefault(edge_key(cyc[i], cyc[(i + 1) % k]), []).append(fid)
    for e, pair in edge_faces.items():
        if len(pair) != 2 or pair[0] == pair[1]:
            raise BadFaceSizes(f"edge {e} does not separate two distinct faces")

    incid: list[list[int]] = [[] for _ in range(rot.n)]
    for fid, cyc in enumerate(faces.faces):
        for v in cyc:
            incid[v].append(fid)
    for v, fs in enumerate(incid):
        if len(fs) != 3:
            raise BadFaceSizes(f"vertex {v} lies on {len(fs)} faces, expected 3")

    face_adjacency: list[tuple[int, ...]] = []
    for fid, cyc in enumerate(faces.faces):
        k = len(cyc)
        ring = []
        for i in range(k):
            pair = edge_faces[edge_key(cyc[i], cyc[(i + 1) % k])]
            ring.append(pair[0] if pair[1] == fid else pair[1])
        face_adjacency.append(tuple(ring))

    ef = {e: (p[0], p[1]) for e, p in edge_faces.items()}
    vf = tuple((fs[0], fs[1], fs[2]) for fs in incid)
    return ef, vf, tuple(face_adjacency)


def validate(rot: RotationSystem) -> Fullerene:
    """Accept a rotation system as a fullerene or raise a specific rejection."""
    if not is_three_connected(rot):
        raise NotThreeConnected(f"graph on {rot.n} vertices is not 3-connected")
    faces = trace_faces(rot)
    bad = [s for s in faces.sizes if s not in (5, 6)]
    if bad:
        raise BadFaceSizes(f"faces of sizes {sorted(set(bad))} present")
    pentagons = tuple(i for i, s in enumerate(faces.sizes) if s == 5)
    if len(pentagons) != 12:
        raise WrongPentagonCount(f"{len(pentagons)} pentagons, expected 12")
    hexagons = tuple(i for i, s in enumerate(faces.sizes) if s == 6)
    edge_faces, vertex_faces, face_adjacency = _face_structure(rot, faces)
    return Fullerene(
        rot, faces, pentagons, hexagons, face_adjacency, vertex_faces, edge_faces
    )


def primal_from_triangulation(tri: sp.Triangulation) -> RotationSystem:
    """Cubic plane graph whose faces are the triangulation's vertices.

    Each triangle becomes a primal vertex; neighbours are listed across
    the triangle's edges in apex order, which inherits one consistent
    orientation from the windup.
    """
    edge_tris: dict[tuple[int, int], list[int]] = {}
    for idx, (a, b, c) in enumerate(tri.triangles):
        for u, v in ((a, b), (b, c), (c, a)):
            edge_tris.setdefault((u, v) if u < v else (v, u), []).append(idx)
    neighbors: list[tuple[int, int, int]] = []
    for idx, (a, b, c) in enumerate(tri.triangles):
        nbrs = []
        for u, v in ((a, b), (b, c), (c, a)):
            pair = edge_tris[(u, v) if u < v else (v, u)]
            nbrs.append(pair[0] if pair[1] == idx else pair[1])
        neighbors.append((nbrs[0], nbrs[1], nbrs[2]))
    return RotationSystem(len(tri.triangles), tuple(neighbors))


def from_spiral(seq: SpiralSequence | tuple[int, ...]) -> Fullerene:
    """Wind a spiral sequence up into a validated fullerene.

    Raises SpiralDoesNotClose when the sequence is infeasible.
    """
    if not isinstance(seq, SpiralSequence):
        seq = SpiralSequence(tuple(seq))
    tri = sp.wind_up(seq.sizes)
    return validate(primal_from_triangulation(tri))


def canonical_form(fullerene: Fullerene) -> CanonicalForm:
    """Minimal spiral over all starts and both senses (mirror identified)."""
    if not fullerene._canonical:
        fullerene._canonical.append(
            CanonicalForm(sp.canonical_spiral(fullerene.dual()))
        )
    return fullerene._canonical[0]


def is_isomorphic(f1: Fullerene, f2: Fullerene) -> bool:
    if f1.n != f2.n:
        return False
    return canonical_form(f1) == canonical_form(f2)


def spiral_of_pentagon_positions(num_faces: int, positions) -> SpiralSequence:
    """Spiral with 5s at the given 1-based positions, 6s elsewhere."""
    pos = set(positions)
    return SpiralSequence(
        tuple(5 if i + 1 in pos else 6 for i in range(num_faces))
    )


IH_C60_PENTAGON_POSITIONS = (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32)

# The 70-vertex nanotube: both caps are isolated-pentagon halves of the
# icosahedral C60 separated by an equatorial hexagon belt; this is the
# unique 70-vertex isomer whose canonical spiral extends the
# isolated-pentagon cap 5,6,6,6,6,6,(5,6)x5.
TUBE_C70_PENTAGON_POSITIONS = (1, 7, 9, 11, 13, 15, 27, 29, 31, 33, 35, 37)


def ih_c60() -> Fullerene:
    """The icosahedral C60 (buckminsterfullerene) from its spiral."""
    return from_spiral(spiral_of_pentagon_positions(32, IH_C60_PENTAGON_POSITIONS))


def tube_c70() -> Fullerene:
    """The 70-vertex nanotube isomer (five-fold symmetric)."""
    return from_spiral(spiral_of_pentagon_positions(37, TUBE_C70_PENTAGON_POSITIONS))


def dodecahedron() -> Fullerene:
    """The unique 20-vertex fullerene (all faces pentagons)."""
    return from_spiral(SpiralSequence((5,) * 12))

"""Shared fixtures: coordinate-built reference polyhedra and small catalogs.

The dodecahedron and the truncated icosahedron are constructed from 3D
coordinates with neighbour order sorted counterclockwise around the
outward normal, giving rotation systems that are fully independent of
the spiral windup code path.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from clarkit.rotation import RotationSystem

PHI = (1 + math.sqrt(5)) / 2


def rotation_from_coordinates(points: np.ndarray, edges) -> RotationSystem:
    """CCW-viewed-from-outside rotation system of a convex polyhedron."""
    n = len(points)
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    triples = []
    for v in range(n):
        normal = points[v] / np.linalg.norm(points[v])
        ref = np.array([1.0, 0.12, 0.34])
        if abs(np.dot(ref, normal)) > 0.95:
            ref = np.array([0.21, 1.0, 0.43])
        e1 = ref - np.dot(ref, normal) * normal
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        ordered = sorted(
            nbrs[v],
            key=lambda u: math.atan2(
                np.dot(points[u] - points[v], e2),
                np.dot(points[u] - points[v], e1),
            ),
        )
        triples.append(tuple(ordered))
    return RotationSystem(n, tuple(triples))


def _edges_by_min_distance(points: np.ndarray) -> list[tuple[int, int]]:
    n = len(points)
    d2 = ((points[:, None, :] - points[None, :, :]) ** 2).sum(axis=2)
    np.fill_diagonal(d2, np.inf)
    cutoff = d2.min() * 1.0001
    return [(u, v) for u in range(n) for v in range(u + 1, n) if d2[u, v] <= cutoff]


def dodecahedron_coordinates() -> np.ndarray:
    pts = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                pts.append((sx, sy, sz))
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts.append((0, s1 / PHI, s2 * PHI))
            pts.append((s1 / PHI, s2 * PHI, 0))
            pts.append((s1 * PHI, 0, s2 / PHI))
    return np.array(pts, dtype=float)


def icosahedron_coordinates() -> np.ndarray:
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts.append((0, s1, s2 * PHI))
            pts.append((s1, s2 * PHI, 0))
            pts.append((s2 * PHI, 0, s1))
    return np.array(pts, dtype=float)


def dodecahedron_by_coordinates() -> RotationSystem:
    pts = dodecahedron_coordinates()
    return rotation_from_coordinates(pts, _edges_by_min_distance(pts))


def truncated_icosahedron_by_coordinates() -> RotationSystem:
    """Hand-built icosahedral C60: truncate every icosahedron vertex."""
    ico = icosahedron_coordinates()
    edges = _edges_by_min_distance(ico)
    darts = []
    for u, v in edges:
        darts.append((u, v))
        darts.append((v, u))
    index = {d: i for i, d in enumerate(darts)}
    pts = np.array([ico[u] + (ico[v] - ico[u]) / 3.0 for (u, v) in darts])
    new_edges = set()
    for u, v in edges:
        new_edges.add(tuple(sorted((index[(u, v)], index[(v, u)]))))
    nbr = {u: [] for u in range(12)}
    for u, v in edges:
        nbr[u].append(v)
        nbr[v].append(u)
    for u in range(12):
        ring = nbr[u]
        for i, a in enumerate(ring):
            for b in ring[i + 1 :]:
                da, db = index[(u, a)], index[(u, b)]
                if np.linalg.norm(pts[da] - pts[db]) < 0.85:
                    new_edges.add(tuple(sorted((da, db))))
    return rotation_from_coordinates(pts, sorted(new_edges))


@pytest.fixture(scope="session")
def dodeca_rot() -> RotationSystem:
    return dodecahedron_by_coordinates()


@pytest.fixture(scope="session")
def c60_rot_by_hand() -> RotationSystem:
    return truncated_icosahedron_by_coordinates()


@pytest.fixture(scope="session")
def c60():
    from clarkit.fullerene import ih_c60

    return ih_c60()


@pytest.fixture(scope="session")
def dodeca():
    from clarkit.fullerene import dodecahedron

    return dodecahedron()


@pytest.fixture(scope="session")
def small_sequences():
    """Canonical spiral sequences for n = 20..40, keyed by n."""
    from clarkit.enumeration import enumerate_spiral_sequences

    return {n: enumerate_spiral_sequences(n) for n in range(20, 42, 2)}

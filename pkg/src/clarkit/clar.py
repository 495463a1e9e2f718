"""Exact sextet patterns, Clar numbers and Clar formulas.

The Clar number is computed by branch and bound over hexagons: hexagons
are ordered by descending number of hexagonal neighbours (ties by face
id), every inclusion is vetted by an exact residual perfect-matching
test, the remaining-hexagon estimate counts candidates compatible with
the chosen set (capped by unused vertices over six), and the search
exits early once the general bound floor((n-12)/6) is attained.  A
subset-exhaustive oracle is kept alongside for testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClarkitError, NotAHexagon, TooManyHexagons
from .fullerene import Fullerene
from .matching import Matching, find_perfect_matching, pm_exists
from .rotation import edge_key

FORMULA_CAP = 10_000


@dataclass(frozen=True)
class SextetPattern:
    """Pairwise disjoint hexagons with an alternating witness matching."""

    hexagons: frozenset[int]
    witness: Matching


@dataclass(frozen=True)
class ClarResult:
    clar_number: int
    formulas: tuple[SextetPattern, ...]
    bound: int
    extremal: bool
    truncated: bool = False

    @property
    def formula_count(self) -> int:
        return len(self.formulas)


def _hexagon_vertex_sets(f: Fullerene) -> dict[int, frozenset[int]]:
    return {h: frozenset(f.face_vertices(h)) for h in f.hexagon_ids}


def _residual_adjacency(f: Fullerene, removed: set[int]) -> dict[int, tuple[int, ...]]:
    return {
        v: tuple(u for u in f.rot.neighbors[v] if u not in removed)
        for v in range(f.n)
        if v not in removed
    }


def _alternating_edges(f: Fullerene, h: int) -> list[tuple[int, int]]:
    """One fixed alternating orientation of a hexagon (edges 0-1, 2-3, 4-5)."""
    cyc = f.face_vertices(h)
    return [edge_key(cyc[i], cyc[i + 1]) for i in (0, 2, 4)]


def _full_witness(f: Fullerene, hexagons, residual: Matching) -> Matching:
    edges = set(residual.edges)
    for h in hexagons:
        edges.update(_alternating_edges(f, h))
    return Matching(frozenset(edges))


def is_sextet_pattern(f: Fullerene, hexagons) -> Matching | None:
    """Witness matching if the face-id set is a sextet pattern, else None.

    Raises NotAHexagon when any id names a pentagon.
    """
    hexagons = frozenset(hexagons)
    for h in hexagons:
        if h in f.pentagon_ids:
            raise NotAHexagon(f"face {h} is a pentagon")
        if f.face_size(h) != 6:
            raise NotAHexagon(f"face {h} has size {f.face_size(h)}")
    removed: set[int] = set()
    for h in hexagons:
        vs = set(f.face_vertices(h))
        if removed & vs:
            return None
        removed |= vs
    residual = find_perfect_matching(_residual_adjacency(f, removed))
    if residual is None:
        return None
    return _full_witness(f, hexagons, residual)


def clar_bound(n: int) -> int:
    return (n - 12) // 6


def _hexagon_order(f: Fullerene) -> list[int]:
    hex_set = set(f.hexagon_ids)

    def hex_degree(h: int) -> int:
        return sum(1 for g in f.face_adjacency[h] if g in hex_set)

    return sorted(f.hexagon_ids, key=lambda h: (-hex_degree(h), h))


class _ClarSearch:
    def __init__(self, f: Fullerene):
        self.f = f
        self.order = _hexagon_order(f)
        self.hvs = _hexagon_vertex_sets(f)
        self.masks = {
            h: sum(1 << v for v in self.hvs[h]) for h in f.hexagon_ids
        }
        self.vadj = [
            sum(1 << u for u in f.rot.neighbors[v]) for v in range(f.n)
        ]
        self.full = (1 << f.n) - 1
        self.memo: dict[int, bool] = {}

    def _upper(self, idx: int, used: int) -> int:
        """Sound estimate of how many more disjoint hexagons can fit.

        Counts candidates compatible with the chosen set, additionally
        capped by the number of unused vertices over six.
        """
        count = 0
        for h in self.order[idx:]:
            if not (self.masks[h] & used):
                count += 1
        free = self.f.n - used.bit_count()
        return min(count, free // 6)

    def _feasible(self, used: int) -> bool:
        return pm_exists(self.vadj, self.full & ~used, self.memo)

    def _witness(self, chosen) -> Matching:
        used = {v for h in chosen for v in self.hvs[h]}
        residual = find_perfect_matching(_residual_adjacency(self.f, used))
        if residual is None:
            raise ClarkitError("internal: feasibility and witness disagree")
        return _full_witness(self.f, chosen, residual)

    def maximum(self) -> tuple[int, SextetPattern]:
        f = self.f
        bound = clar_bound(f.n)
        if not self._feasible(0):
            raise ClarkitError("graph has no perfect matching; Clar number undefined")
        best = 0
        best_chosen: tuple[int, ...] = ()
        chosen: list[int] = []

        def rec(idx: int, used: int):
            nonlocal best, best_chosen
            if best >= bound:
                return
            if len(chosen) + self._upper(idx, used) <= best:
                return
            if idx == len(self.order):
                return
            h = self.order[idx]
            m = self.masks[h]
            if not (m & used) and self._feasible(used | m):
                chosen.append(h)
                if len(chosen) > best:
                    best = len(chosen)
                    best_chosen = tuple(chosen)
                rec(idx + 1, used | m)
                chosen.pop()
            rec(idx + 1, used)

        rec(0, 0)
        return best, SextetPattern(frozenset(best_chosen), self._witness(best_chosen))

    def all_maximum(self, target: int, cap: int) -> tuple[list[SextetPattern], bool]:
        found: list[SextetPattern] = []
        truncated = False
        chosen: list[int] = []

        def rec(idx: int, used: int):
            nonlocal truncated
            if truncated:
                return
            if len(chosen) + self._upper(idx, used) < target:
                return
            if len(chosen) == target:
                if len(found) >= cap:
                    truncated = True
                    return
                found.append(
                    SextetPattern(frozenset(chosen), self._witness(chosen))
                )
                return
            if idx == len(self.order):
                return
            h = self.order[idx]
            m = self.masks[h]
            if not (m & used) and self._feasible(used | m):
                chosen.append(h)
                rec(idx + 1, used | m)
                chosen.pop()
            rec(idx + 1, used)

        rec(0, 0)
        return found, truncated


def clar_number(f: Fullerene, with_formulas: bool = False, cap: int = FORMULA_CAP) -> ClarResult:
    """Exact Clar number with a witness formula.

    With ``with_formulas`` every maximum sextet pattern is enumerated
    (deduplicated as face-id sets, capped at ``cap`` with a truncation
    flag).
    """
    search = _ClarSearch(f)
    best, pattern = search.maximum()
    bound = clar_bound(f.n)
    extremal = 6 * best == f.n - 12
    if with_formulas:
        formulas, truncated = search.all_maximum(best, cap)
        formulas.sort(key=lambda p: sorted(p.hexagons))
        return ClarResult(best, tuple(formulas), bound, extremal, truncated)
    return ClarResult(best, (pattern,), bound, extremal)


def enumerate_clar_formulas(f: Fullerene, cap: int = FORMULA_CAP) -> list[SextetPattern]:
    """All maximum-cardinality sextet patterns (the Clar formulas)."""
    return list(clar_number(f, with_formulas=True, cap=cap).formulas)


def is_extremal(f: Fullerene) -> bool:
    """True iff the Clar number attains (n - 12) / 6 exactly."""
    return 6 * clar_number(f).clar_number == f.n - 12


def clar_brute_force(f: Fullerene, max_hexagons: int = 22) -> int:
    """Oracle: exhaustive scan over disjoint hexagon subsets.

    Checks the residual perfect matching for every candidate larger than
    the best so far; no pruning beyond disjointness.  Guarded to
    desk-scale hexagon counts.
    """
    hexagons = list(f.hexagon_ids)
    if len(hexagons) > max_hexagons:
        raise TooManyHexagons(
            f"{len(hexagons)} hexagons exceeds the oracle guard {max_hexagons}"
        )
    hvs = _hexagon_vertex_sets(f)
    if find_perfect_matching(_residual_adjacency(f, set())) is None:
        raise ClarkitError("graph has no perfect matching; Clar number undefined")
    best = 0
    chosen: list[int] = []

    def rec(idx: int, used: set[int]):
        nonlocal best
        if len(chosen) > best:
            if find_perfect_matching(_residual_adjacency(f, used)) is not None:
                best = len(chosen)
        for j in range(idx, len(hexagons)):
            h = hexagons[j]
            hv = hvs[h]
            if used & hv:
                continue
            chosen.append(h)
            rec(j + 1, used | hv)
            chosen.pop()

    rec(0, set())
    return best

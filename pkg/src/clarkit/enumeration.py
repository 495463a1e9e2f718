"""Constructive isomer enumeration and the extremal census.

Spiral position sets are explored by a backtracking windup (the
compiled kernel); a wound-up sequence is kept exactly when it is the
lexicographically smallest spiral of its graph, so every isomer appears
once, in sequence order, with no cross-worker state.  Analysis (Clar,
Fries, fragment classes, structural extremality) attaches to catalog
entries afterwards and parallelises per isomer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from multiprocessing import Pool

import numpy as np

from . import clar as clar_mod
from . import fragments as frag_mod
from . import matching as match_mod
from .errors import ClarkitError, OutOfSupportedRange, ParseError
from .fullerene import CanonicalForm, SpiralSequence, from_spiral

WORKERS_ENV = "CLARKIT_WORKERS"

# classes of the 60-vertex extremal census (disjoint, exhaustive)
CLASS_B3 = "B3"
CLASS_B1K = "B1k"
CLASS_B2B1 = "B2*B1"
CLASS_MAXIMAL = "maximal-B1/B2"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


@dataclass(frozen=True)
class IsomerRecord:
    canonical: CanonicalForm
    clar: int
    bound: int
    extremal: bool
    formula_count: int
    formulas_truncated: bool
    fries: int | None
    component_tags: tuple[str, ...]
    theorem2: bool | None

    @property
    def n(self) -> int:
        return 2 * (len(self.canonical.spiral) - 2)


@dataclass(frozen=True)
class IsomerCatalog:
    n: int
    entries: tuple[IsomerRecord, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def extremal_entries(self) -> tuple[IsomerRecord, ...]:
        return tuple(e for e in self.entries if e.extremal)


def supported_range(n: int) -> None:
    if n < 20 or n > 120 or n % 2 != 0:
        raise OutOfSupportedRange(f"n = {n} outside supported even range 20..120")


def enumerate_spiral_sequences(n: int, workers: int | None = None) -> list[tuple[int, ...]]:
    """All canonical spiral sequences with n vertices, lexicographic.

    The kernel explores the full position space; with several workers
    the space is partitioned by sequence prefixes and results are
    concatenated in prefix order, so output is deterministic.
    """
    supported_range(n)
    nf = n // 2 + 2
    workers = workers or default_workers()
    if workers <= 1:
        return _run_kernel(nf, np.zeros(0, np.int8))
    prefixes = _split_prefixes(nf, depth=6)
    with Pool(workers) as pool:
        chunks = pool.starmap(
            _run_kernel, [(nf, np.array(p, np.int8)) for p in prefixes]
        )
    out: list[tuple[int, ...]] = []
    for c in chunks:
        out.extend(c)
    return out


def _split_prefixes(nf: int, depth: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered sequence prefixes partitioning the space."""
    prefixes: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        prefixes = [p + (s,) for p in prefixes for s in (5, 6)]
    # drop prefixes that cannot reach twelve 5s or enough 6s
    nhex = nf - 12
    return [
        p
        for p in prefixes
        if sum(1 for s in p if s == 5) <= 12
        and sum(1 for s in p if s == 6) <= nhex
    ]


def _run_kernel(nf: int, prefix: np.ndarray) -> list[tuple[int, ...]]:
    from ._spiral_kernel import enumerate_spirals

    cap = 4096
    while True:
        out = np.zeros((cap, nf), np.int8)
        k = enumerate_spirals(nf, 12, prefix, out)
        if k >= 0:
            return [tuple(int(x) for x in out[i]) for i in range(k)]
        cap *= 4


def analyze_isomer(
    seq: tuple[int, ...],
    with_fries: bool = True,
    with_theorem2: bool = False,
    formula_cap: int = clar_mod.FORMULA_CAP,
) -> IsomerRecord:
    """Full per-isomer analysis record from a canonical spiral sequence."""
    f = from_spiral(SpiralSequence(seq))
    res = clar_mod.clar_number(f, with_formulas=True, cap=formula_cap)
    fries = match_mod.fries_number(f)[0] if with_fries else None
    tags = []
    for g in frag_mod.pentagon_components(f):
        try:
            tags.append(frag_mod.classify_fragment(f, g).tag)
        except ClarkitError:
            tags.append("Other")
    theorem2 = None
    if with_theorem2 and f.n >= 60:
        theorem2 = frag_mod.theorem2_classify(f)
    return IsomerRecord(
        CanonicalForm(seq),
        res.clar_number,
        res.bound,
        res.extremal,
        res.formula_count,
        res.truncated,
        fries,
        tuple(sorted(tags)),
        theorem2,
    )


def _analyze_star(args) -> IsomerRecord:
    return analyze_isomer(*args)


def enumerate_isomers(
    n: int,
    workers: int | None = None,
    with_fries: bool = True,
    with_theorem2: bool = False,
) -> IsomerCatalog:
    """Catalog of all isomers with attached analysis, sorted by spiral."""
    seqs = enumerate_spiral_sequences(n, workers)
    seqs.sort()
    workers = workers or default_workers()
    args = [(s, with_fries, with_theorem2) for s in seqs]
    if workers <= 1 or len(seqs) < 8:
        entries = [_analyze_star(a) for a in args]
    else:
        with Pool(workers) as pool:
            entries = pool.map(_analyze_star, args, chunksize=16)
    return IsomerCatalog(n, tuple(entries))


def extremal_census(
    n: int, workers: int | None = None, catalog: IsomerCatalog | None = None
) -> tuple[IsomerCatalog, tuple[IsomerRecord, ...]]:
    """Catalog plus the sublist of extremal isomers (with theorem-2
    verdicts attached to the extremal entries)."""
    if catalog is None:
        catalog = enumerate_isomers(n, workers)
    extremal = []
    for e in catalog.extremal_entries():
        if e.theorem2 is None and n >= 60:
            f = from_spiral(SpiralSequence(e.canonical.spiral))
            e = replace(e, theorem2=frag_mod.theorem2_classify(f))
        extremal.append(e)
    return catalog, tuple(extremal)


def breakdown_class(record: IsomerRecord) -> str:
    """Census class of an extremal 60-vertex isomer from component tags."""
    tags = record.component_tags
    if "B3" in tags:
        return CLASS_B3
    if "P2" in tags:
        return CLASS_B1K
    if "P_B2" in tags or "P_B2_P" in tags:
        return CLASS_B2B1
    if set(tags) <= {"P", "B2"}:
        return CLASS_MAXIMAL
    raise ParseError(f"unclassifiable extremal component tags: {tags}")


def census_breakdown(extremal: tuple[IsomerRecord, ...]) -> dict[str, int]:
    """Partition of the extremal isomers into the four census classes."""
    counts = {CLASS_B3: 0, CLASS_B1K: 0, CLASS_B2B1: 0, CLASS_MAXIMAL: 0}
    for e in extremal:
        counts[breakdown_class(e)] += 1
    return counts


def isolated_pentagon_entries(extremal) -> list[IsomerRecord]:
    return [e for e in extremal if set(e.component_tags) == {"P"}]


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def catalog_lines(catalog: IsomerCatalog) -> list[str]:
    """Manifest lines: n, canonical spiral, clar, fries (tab separated)."""
    out = []
    for e in catalog.entries:
        fries = "" if e.fries is None else str(e.fries)
        out.append(f"{catalog.n}\t{e.canonical}\t{e.clar}\t{fries}")
    return out


def analysis_lines(catalog: IsomerCatalog) -> list[str]:
    """Sidecar lines: spiral, clar, bound, extremal, formula count."""
    out = []
    for e in catalog.entries:
        out.append(
            f"{e.canonical}\t{e.clar}\t{e.bound}\t"
            f"{'yes' if e.extremal else 'no'}\t{e.formula_count}"
        )
    return out


def write_catalog(catalog: IsomerCatalog, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(catalog_lines(catalog)) + "\n")


def write_analysis(catalog: IsomerCatalog, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(analysis_lines(catalog)) + "\n")


def read_spiral_file(path: str) -> list[SpiralSequence]:
    """One isomer per line, comma-separated face sizes."""
    out = []
    with open(path) as fh:
        for i, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(SpiralSequence.parse(line))
            except Exception as exc:
                raise ParseError(f"{path}:{i}: {exc}") from exc
    return out

import pytest

from clarkit.enumeration import (
    CLASS_B1K,
    CLASS_B2B1,
    CLASS_B3,
    CLASS_MAXIMAL,
    IsomerRecord,
    analysis_lines,
    analyze_isomer,
    breakdown_class,
    catalog_lines,
    enumerate_isomers,
    enumerate_spiral_sequences,
    read_spiral_file,
)
from clarkit.errors import OutOfSupportedRange
from clarkit.fullerene import CanonicalForm, from_spiral, validate
from clarkit.rotation import cyclic_edge_connectivity_at_least

KNOWN = {20: 1, 22: 0, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6}


@pytest.mark.parametrize("n", sorted(KNOWN))
def test_counts_match_census(n):
    assert len(enumerate_spiral_sequences(n)) == KNOWN[n]


def test_out_of_range():
    with pytest.raises(OutOfSupportedRange):
        enumerate_spiral_sequences(18)
    with pytest.raises(OutOfSupportedRange):
        enumerate_spiral_sequences(122)
    with pytest.raises(OutOfSupportedRange):
        enumerate_spiral_sequences(25)


def test_determinism_and_worker_independence():
    a = enumerate_spiral_sequences(30)
    b = enumerate_spiral_sequences(30)
    c = enumerate_spiral_sequences(30, workers=2)
    assert a == b == c


def test_catalog_entries_validate():
    cat = enumerate_isomers(28, with_fries=True)
    assert len(cat) == 2
    for e in cat.entries:
        f = from_spiral(e.canonical.spiral)
        assert validate(f.rot).n == 28
        assert cyclic_edge_connectivity_at_least(f.rot, 5)
        assert not cyclic_edge_connectivity_at_least(f.rot, 6)
        assert e.fries is not None and e.fries <= 28 // 3


def test_catalog_and_analysis_formats(tmp_path):
    cat = enumerate_isomers(24)
    lines = catalog_lines(cat)
    assert len(lines) == 1
    n, spiral, clar, fries = lines[0].split("\t")
    assert n == "24"
    assert spiral.count(",") == 13
    assert clar == "2"
    a_lines = analysis_lines(cat)
    spiral2, clar2, bound, extremal, count = a_lines[0].split("\t")
    assert spiral2 == spiral
    assert (clar2, bound, extremal) == ("2", "2", "yes")
    path = tmp_path / "spirals.txt"
    path.write_text(spiral + "\n\n" + spiral + "\n")
    seqs = read_spiral_file(str(path))
    assert len(seqs) == 2 and str(seqs[0]) == spiral


def test_breakdown_classification_rules():
    def rec(tags):
        return IsomerRecord(
            CanonicalForm((5,) * 12 + (6,) * 20),
            8, 8, True, 1, False, None, tuple(sorted(tags)), None,
        )

    assert breakdown_class(rec(["B3", "B3"])) == CLASS_B3
    assert breakdown_class(rec(["P2", "P2", "P"] * 2)) == CLASS_B1K
    assert breakdown_class(rec(["P_B2", "P", "B2"])) == CLASS_B2B1
    assert breakdown_class(rec(["P_B2_P", "P_B2_P"])) == CLASS_B2B1
    assert breakdown_class(rec(["P"] * 12)) == CLASS_MAXIMAL
    assert breakdown_class(rec(["B2", "B2", "P", "P"])) == CLASS_MAXIMAL


def test_analyze_isomer_record(c60):
    rec = analyze_isomer(
        tuple(5 if i + 1 in {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32} else 6 for i in range(32)),
        with_fries=True,
        with_theorem2=True,
    )
    assert rec.n == 60
    assert rec.clar == 8
    assert rec.fries == 20
    assert rec.extremal
    assert rec.formula_count == 5
    assert rec.component_tags == ("P",) * 12
    assert rec.theorem2 is True

import os

from clarkit.cli import main
from clarkit.fullerene import ih_c60, spiral_of_pentagon_positions
from clarkit.rotation import to_adjacency_text

C60_SPIRAL = str(spiral_of_pentagon_positions(32, (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32)))


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_inline_spiral(capsys):
    code, out, _ = run(capsys, "validate", C60_SPIRAL)
    assert code == 0
    assert "fullerene: n=60, pentagons=12, hexagons=20" in out
    assert "cλ=5" in out


def test_validate_all_fives(capsys):
    code, out, _ = run(capsys, "validate", ",".join(["5"] * 12))
    assert code == 0
    assert "n=20" in out


def test_validate_adjacency_file(tmp_path, capsys):
    path = tmp_path / "c60.adj"
    path.write_text(to_adjacency_text(ih_c60().rot))
    code, out, _ = run(capsys, "validate", str(path), "--format", "adjacency")
    assert code == 0
    assert "n=60" in out


def test_clar_command(capsys):
    code, out, _ = run(capsys, "clar", C60_SPIRAL)
    assert code == 0
    assert "clar=8 bound=8 extremal=yes formulas=5" in out


def test_fries_command(capsys):
    code, out, _ = run(capsys, "fries", C60_SPIRAL)
    assert code == 0
    assert "fries=20 pentagon_free=yes" in out


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", C60_SPIRAL)
    assert code == 0
    assert out.count("tag=P") == 12
    assert "theorem2=extremal direct=extremal" in out


def test_census_small(tmp_path, capsys):
    code, out, _ = run(
        capsys, "census", "--n", "20", "--out", str(tmp_path)
    )
    assert code == 0
    assert "isomers=1 extremal=0" in out
    assert (tmp_path / "catalog-20.tsv").exists()
    code, out, _ = run(capsys, "census", "--n", "22", "--out", str(tmp_path))
    assert "isomers=0" in out


def test_census_figure(tmp_path, capsys):
    code, out, _ = run(
        capsys, "census", "--n", "24", "--out", str(tmp_path), "--figure", "svg"
    )
    assert code == 0
    fig = tmp_path / "extremal-24.svg"
    assert fig.exists() and fig.read_bytes().startswith(b"<?xml")


def test_enumerate_command(tmp_path, capsys):
    out_path = tmp_path / "cat.tsv"
    code, out, _ = run(
        capsys, "enumerate", "--n", "28", "--out", str(out_path), "--no-fries"
    )
    assert code == 0
    assert "isomers=2" in out
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == 2


def test_validate_round_trip_on_census_output(tmp_path, capsys):
    run(capsys, "census", "--n", "24", "--out", str(tmp_path))
    for line in (tmp_path / "catalog-24.tsv").read_text().splitlines():
        code, out, _ = run(capsys, "validate", line)
        assert code == 0


def test_parse_failure_exit_code(capsys):
    code, _, err = run(capsys, "clar", "5,5,banana")
    assert code == 2
    assert "parse error" in err


def test_validation_failure_exit_code(tmp_path, capsys):
    # a cubic plane graph that is not a fullerene (the cube)
    text = "8\n" + "\n".join(
        f"{v}: " + " ".join(map(str, nbrs))
        for v, nbrs in enumerate(
            [(1, 3, 4), (0, 2, 5), (1, 3, 6), (0, 2, 7), (0, 5, 7), (1, 4, 6), (2, 5, 7), (3, 4, 6)]
        )
    ) + "\n"
    path = tmp_path / "cube.adj"
    path.write_text(text)
    code, _, err = run(capsys, "validate", str(path), "--format", "adjacency")
    assert code == 1
    assert "validation error" in err


def test_svg_deterministic(tmp_path, capsys):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    run(capsys, "clar", C60_SPIRAL, "--svg", str(a))
    run(capsys, "clar", C60_SPIRAL, "--svg", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().startswith(b"<?xml")


def test_workers_env_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CLARKIT_WORKERS", "2")
    code, out, _ = run(
        capsys, "enumerate", "--n", "26", "--out", str(tmp_path / "c.tsv"), "--no-fries"
    )
    assert code == 0
    assert "isomers=1" in out

import numpy as np
import pytest

from tricomplex import verify as verify_mod
from tricomplex.cli import run
from tricomplex.formats import (
    downsample_gray,
    gray_image,
    gray_ppm_bytes,
    octahedron_obj_text,
    ppm_bytes,
    roots_csv_text,
    vox_bytes,
)
from tricomplex.raster import Window2D, Window3D, scan2d, scan3d
from tricomplex.realroots import classify, refine_bounds
from tricomplex.sets import OctahedronSpec
from tricomplex.verify import CheckRow


# ---------------------------------------------------------------- rendering

def test_multibrot_render_matches_library_call(tmp_path):
    out = tmp_path / "m.ppm"
    code = run(["multibrot", "--power", "3", "--res", "16",
                "--max-iter", "50", "--out", str(out)])
    assert code == 0
    want = scan2d("multibrot-complex", 3, Window2D(-1.5, 1.5, -1.5, 1.5, 16, 16), 50)
    assert out.read_bytes() == ppm_bytes(want)


def test_window_option_accepts_leading_minus(tmp_path):
    out = tmp_path / "h.ppm"
    code = run(["hyperbrot", "--res", "24", "--max-iter", "40",
                "--window", "-1,1,-0.5,0.5", "--out", str(out)])
    assert code == 0
    want = scan2d("hyperbrot", 3, Window2D(-1, 1, -0.5, 0.5, 24, 24), 40)
    assert out.read_bytes() == ppm_bytes(want)


def test_supersampled_render_box_averages(tmp_path):
    out = tmp_path / "s.ppm"
    code = run(["hyperbrot", "--res", "8", "--max-iter", "30",
                "--window", "-1,1,-1,1", "--supersample", "2", "--out", str(out)])
    assert code == 0
    fine = scan2d("hyperbrot", 3, Window2D(-1, 1, -1, 1, 16, 16), 30)
    want = gray_ppm_bytes(downsample_gray(gray_image(fine), 2))
    assert out.read_bytes() == want


def test_threads_do_not_change_cli_output(tmp_path):
    outs = []
    for threads in ("1", "4"):
        out = tmp_path / f"t{threads}.ppm"
        assert run(["multibrot", "--res", "32", "--max-iter", "60",
                    "--threads", threads, "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_perplexbrot_render_with_obj(tmp_path):
    vox = tmp_path / "p.vox"
    obj = tmp_path / "p.obj"
    code = run(["perplexbrot", "--res", "8", "--max-iter", "20",
                "--out", str(vox), "--obj", str(obj)])
    assert code == 0
    want = scan3d(("1", "j1", "j2"), 3, Window3D(-1, 1, -1, 1, -1, 1, 8, 8, 8), 20)
    assert vox.read_bytes() == vox_bytes(want)
    assert obj.read_text() == octahedron_obj_text(OctahedronSpec.for_power(3))


def test_principal_slice_equals_perplexbrot(tmp_path):
    a = tmp_path / "a.vox"
    b = tmp_path / "b.vox"
    common = ["--res", "12", "--max-iter", "25"]
    assert run(["perplexbrot", *common, "--out", str(a)]) == 0
    assert run(["slice", "--axes", "1,j1,j2", *common, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_other_slices_render(tmp_path):
    out = tmp_path / "s.vox"
    code = run(["slice", "--axes", "1,i1,j3", "--res", "6",
                "--max-iter", "15", "--out", str(out)])
    assert code == 0
    assert out.read_bytes().startswith(b"TRIVOX1 6 6 6 ")


# -------------------------------------------------------------------- roots

def test_roots_interior_parameter(capsys):
    assert run(["roots", "--power", "3", "--c", "0.2"]) == 0
    captured = capsys.readouterr()
    want = roots_csv_text(refine_bounds(3, 0.2, classify(3, 0.2)))
    assert captured.out == want
    assert "regime: ThreeSimple" in captured.err


def test_roots_exterior_parameter(capsys):
    assert run(["roots", "--power", "3", "--c", "0.5"]) == 0
    captured = capsys.readouterr()
    assert captured.out == roots_csv_text(classify(3, 0.5))
    assert "regime: OneNegative" in captured.err


def test_roots_rejects_even_power(capsys):
    assert run(["roots", "--power", "4", "--c", "0.1"]) == 1
    assert "odd power" in capsys.readouterr().err


# ------------------------------------------------------------------- verify

def test_verify_single_suite_to_file(tmp_path, capsys):
    out = tmp_path / "report.csv"
    code = run(["verify", "--suite", "roots", "--out", str(out)])
    captured = capsys.readouterr()
    assert code == 0
    text = out.read_text()
    assert text.startswith("check_name,expected,observed,tolerance,pass\n")
    assert "of" in captured.err and "checks passed" in captured.err
    assert captured.out == ""
    # every row of a healthy build passes
    assert ",false\n" not in text


def test_verify_failure_exits_two(monkeypatch, capsys):
    def fake_suite(name, seed=0):
        return [CheckRow("doomed", 1.0, 2.0, 0.0, False)]

    monkeypatch.setattr(verify_mod, "run_suite", fake_suite)
    code = run(["verify", "--suite", "algebra"])
    captured = capsys.readouterr()
    assert code == 2
    assert "FAIL doomed" in captured.err
    assert "0 of 1 checks passed" in captured.err
    assert captured.out.splitlines()[1] == "doomed,1.000000000,2.000000000,0.000000000,false"


def test_verify_rejects_unknown_suite(capsys):
    assert run(["verify", "--suite", "nonsense"]) == 1
    assert "error:" in capsys.readouterr().err


# ----------------------------------------------------------- error handling

def test_exit_codes_for_bad_usage(tmp_path, capsys):
    cases = [
        ["frobnicate"],                                          # unknown command
        [],                                                      # missing command
        ["multibrot"],                                           # missing --out
        ["multibrot", "--res", "0", "--out", "x.ppm"],           # res must be >= 1
        ["multibrot", "--window", "2,1,0,1", "--out", "x.ppm"],  # inverted range
        ["multibrot", "--window", "1,2,3", "--out", "x.ppm"],    # wrong arity
        ["slice", "--axes", "1,1,j1", "--out", "x.vox"],         # duplicate unit
        ["slice", "--axes", "1,q7,j1", "--out", "x.vox"],        # unknown unit
    ]
    for argv in cases:
        assert run(argv) == 1, argv
        err = capsys.readouterr().err
        assert "error" in err.lower(), argv


def test_render_io_failure_reports_path(tmp_path, capsys):
    target = tmp_path / "missing_dir" / "o.ppm"
    code = run(["multibrot", "--res", "4", "--max-iter", "5", "--out", str(target)])
    assert code == 1
    assert "o.ppm" in capsys.readouterr().err


def test_version_and_help_exit_zero(capsys):
    assert run(["--version"]) == 0
    assert "tricomplex" in capsys.readouterr().out
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    assert "multibrot" in out and "verify" in out

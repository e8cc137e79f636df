import math
import os
import subprocess

import numpy as np
import pytest

import pnr


def test_spec_parsing():
    spec = pnr.PeriodSpec.from_word("01")
    assert spec.period == 2
    assert list(spec.a) == [0, 1]
    with pytest.raises(pnr.ParseError):
        pnr.PeriodSpec.parse("p=2;a=0,x")


def test_nilpotent_disk():
    poly = pnr.range_boundary(np.array([[0, 1], [0, 0]], dtype=complex), num_theta=360)
    assert poly.dtype == np.complex128
    assert np.allclose(np.abs(poly), 0.5, atol=1e-12)
    assert len(np.unique(np.round(poly, 12))) == 360


def test_stadium_widths():
    hull = pnr.symbol_union_hull(pnr.PeriodSpec.from_word("01"), num_theta=180, num_phi=180)
    assert abs(pnr.support_width(hull, 0.0) - 1.5) < 1e-3
    assert abs(pnr.support_width(hull, math.pi / 2) - 0.5) < 1e-3


def test_laplacian_interval():
    spec = pnr.PeriodSpec.parse("p=2;a=1,1;b=0,0;c=1,1")
    lo, hi = pnr.selfadjoint_interval(spec)
    assert abs(lo + 2) < 1e-9 and abs(hi - 2) < 1e-9
    with pytest.raises(pnr.NotSelfAdjoint):
        pnr.selfadjoint_interval(pnr.PeriodSpec.from_word("01"))


def test_symmetric_pair():
    plus, minus = pnr.conjecture_matrices(2)
    p = pnr.range_boundary(plus)
    m = pnr.range_boundary(minus)
    assert pnr.hausdorff(p, -m) < 1e-8


def test_symbol_matches_numpy():
    spec = pnr.PeriodSpec.from_word("001")
    t = pnr.build_symbol(spec, 0.7)
    assert t.shape == (3, 3)
    assert abs(t[0, 2] - np.exp(-0.7j) * spec.a[0]) < 1e-15


def test_run_checks():
    reports = pnr.run_checks("quick", "conjecture/n=1")
    assert [r["name"] for r in reports] == ["conjecture/n=1"]
    assert reports[0]["as_expected"]


@pytest.mark.skipif("PNR_CLI" not in os.environ, reason="cli path not provided")
def test_cli_range():
    out = subprocess.run([os.environ["PNR_CLI"], "range", "--word", "01", "--num-theta", "36", "--num-phi", "36"],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("re,im\n")
    bad = subprocess.run([os.environ["PNR_CLI"], "range", "--spec", "p=2;a=0,x"], capture_output=True, text=True)
    assert bad.returncode == 2

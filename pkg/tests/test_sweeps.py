import pytest

from lieslice.sweeps import SWEEPS, run_sweep, saturation_probe


def test_registry_names():
    for name in (
        "jordan", "jm", "slodowy", "fundamental", "contracting", "induction",
        "classes", "perp", "natural", "residual", "weyl", "sp", "groupoid",
    ):
        assert name in SWEEPS


def test_run_sweep_dispatch_and_unknown():
    report = run_sweep("weyl", seed=5, n_max=3)
    assert report["pass"] and report["suite"] == "weyl"
    with pytest.raises(KeyError):
        run_sweep("nonsense")


def test_reports_are_deterministic():
    a = run_sweep("classes", seed=123, samples=60, n_max=3)
    b = run_sweep("classes", seed=123, samples=60, n_max=3)
    assert a == b


def test_saturation_probe_reports_coverage():
    # desk-scale shadow of G_{x_s} S_{x,T} = S_x: coverage statistics only;
    # points with irrational spectra are reported as undecidable over Q
    report = saturation_probe(seed=1, samples=60)
    assert report["listed_entries"] == 2
    assert report["realized_entries"] == 2
    assert report["undecidable_over_Q"] + int(report["member_rate"].split("/")[0]) <= 60
    assert report["pass"]

"""Acceptance suite.

One test per criterion, run at the stated parameters with exact arithmetic
(tolerance: exact everywhere).  Each test prints a PASS/FAIL line; run
`pytest tests/test_acceptance.py -v -s` to see them live.
"""

import time

from lieslice.sweeps import (
    classes_sweep,
    contracting_sweep,
    fundamental_sweep,
    groupoid_sweep,
    induction_sweep,
    jm_sweep,
    jordan_sweep,
    natural_sweep,
    perp_sweep,
    residual_sweep,
    slodowy_sweep,
    sp_sweep,
    weyl_sweep,
)

SEED = 20260811


def _report(number, name, result, elapsed, extra=""):
    status = "PASS" if result["pass"] else "FAIL"
    line = (
        f"ACCEPTANCE {number:2d} {name:<22s} {status}  "
        f"checks={result['checks']} time={elapsed:.1f}s{extra}"
    )
    print(line)
    assert result["pass"], f"{line}; failures: {result['failures'][:5]}"


def test_criterion_01_jordan_chevalley():
    t0 = time.time()
    result = jordan_sweep(seed=SEED, samples=100, n_max=6)
    elapsed = time.time() - t0
    _report(1, "jordan-chevalley", result, elapsed)
    assert elapsed < 30.0, f"criterion 1 exceeded its 30 s budget: {elapsed:.1f}s"


def test_criterion_02_jacobson_morozov():
    t0 = time.time()
    result = jm_sweep(n_max=6)
    _report(2, "jacobson-morozov", result, time.time() - t0)


def test_criterion_03_slodowy_transversality():
    t0 = time.time()
    result = slodowy_sweep(seed=SEED, samples=50, n_max=4)
    _report(3, "slodowy-transversal", result, time.time() - t0)


def test_criterion_04_fundamental_domain():
    t0 = time.time()
    result = fundamental_sweep(seed=SEED, samples=50, n_max=5)
    _report(4, "fundamental-domain", result, time.time() - t0)


def test_criterion_05_contracting_action():
    t0 = time.time()
    result = contracting_sweep(n_max=6)
    _report(5, "contracting-action", result, time.time() - t0)


def test_criterion_06_induction():
    t0 = time.time()
    result = induction_sweep(seed=SEED, samples=25, n_max=6, richardson_n_max=8)
    _report(6, "ls-induction", result, time.time() - t0)


def test_criterion_07_decomposition_classes():
    t0 = time.time()
    result = classes_sweep(seed=SEED, samples=1000, n_max=4)
    _report(7, "decomposition-classes", result, time.time() - t0)


def test_criterion_08_perp_identity():
    t0 = time.time()
    result = perp_sweep(n_max=4)
    _report(8, "perp-identity", result, time.time() - t0)


def test_criterion_09_natural_slice():
    t0 = time.time()
    result = natural_sweep(seed=SEED, samples=100, n_max=4)
    _report(9, "natural-slice", result, time.time() - t0)


def test_criterion_10_residual_groups():
    t0 = time.time()
    result = residual_sweep(n_max=5)
    _report(10, "residual-groups", result, time.time() - t0)


def test_criterion_11_weyl_fiber():
    t0 = time.time()
    result = weyl_sweep(seed=SEED, n_max=4)
    _report(11, "weyl-fiber", result, time.time() - t0)


def test_criterion_12_sp_example():
    t0 = time.time()
    result = sp_sweep(seed=SEED, samples=200, n_max=4)
    _report(12, "sp-moment-map", result, time.time() - t0)


def test_criterion_13_groupoid_axioms():
    t0 = time.time()
    result = groupoid_sweep(seed=SEED, samples=100, n_max=3)
    _report(13, "groupoid-axioms", result, time.time() - t0)

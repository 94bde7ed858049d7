"""Named profile families against their closed-form norm tables."""

import math

import numpy as np
import pytest

from moser2d import (
    SequenceSpec,
    alvino_extremal,
    alvino_l2_sq,
    cap,
    cap_l2_sq,
    counterexample,
    counterexample_j_lower_bound,
    counterexample_l2_sq,
    counterexample_scales,
    dirichlet_norm_sq,
    l2_norm_sq,
    modified_moser,
    modified_moser_norms,
    moser,
    moser_l2_sq,
    oracle_rows,
    tm_functional,
    zygmund_optimal,
)

from conftest import brute_l2, rel_err


def test_oracle_grid_matches_computed_norms():
    specs = oracle_rows()
    assert len(specs) >= 20
    for spec in specs:
        p = spec.build()
        oracle = spec.oracle_values()
        assert rel_err(dirichlet_norm_sq(p), oracle["dirichlet_sq"]) < 1e-12
        assert rel_err(l2_norm_sq(p), oracle["l2_sq"]) < 1e-12


def test_moser_unit_dirichlet():
    for n in (2, 10, 1000, 10**6):
        assert dirichlet_norm_sq(moser(n)) == pytest.approx(1.0, rel=1e-15)


def test_moser_l2_closed_form():
    # independent value computed from the slope/plateau decomposition
    assert moser_l2_sq(10) == pytest.approx(0.10248788427105482, rel=1e-15)
    for n in (10, 100, 10**4):
        p = moser(n)
        assert rel_err(l2_norm_sq(p), moser_l2_sq(n)) < 1e-13
        assert rel_err(brute_l2(p), moser_l2_sq(n)) < 1e-10


def test_moser_shape():
    p = moser(10)
    ln = math.log(10)
    assert p.t_support == math.pi
    assert list(p.s) == [0.0, 2.0 * ln]
    assert p.v[-1] == pytest.approx(math.sqrt(ln / (2.0 * math.pi)), rel=1e-15)


def test_counterexample_scales_and_norms():
    for n in (10**3, 10**6):
        r, lam = counterexample_scales(n)
        ln = math.log(n)
        assert r == pytest.approx(math.sqrt(ln) / math.log(ln), rel=1e-15)
        assert 0.0 < lam < 1.0
        p = counterexample(n)
        assert rel_err(dirichlet_norm_sq(p), lam * lam) < 1e-12
        assert rel_err(l2_norm_sq(p), counterexample_l2_sq(n)) < 1e-12
    assert counterexample_l2_sq(10**6) == pytest.approx(
        0.03453642726089797, rel=1e-13
    )


def test_counterexample_dirichlet_strictly_below_one():
    for n in (10, 100, 10**4, 10**6):
        assert dirichlet_norm_sq(counterexample(n)) < 1.0


def test_counterexample_j_dominates_plateau_bound():
    for n in (10**3, 10**6):
        j = tm_functional(counterexample(n), 4.0 * math.pi, tol=1e-10).j_beta
        assert j >= counterexample_j_lower_bound(n)


def test_cap_norms():
    for k in (1.0, 4.0, 16.0, 64.0):
        for r in (0.5, 1.0, 2.0):
            p = cap(k, r)
            assert p.t_support == pytest.approx(math.pi * r * r, rel=1e-15)
            assert dirichlet_norm_sq(p) == pytest.approx(1.0, rel=1e-14)
            assert rel_err(l2_norm_sq(p), cap_l2_sq(k, r)) < 1e-13
            assert rel_err(brute_l2(p), cap_l2_sq(k, r)) < 1e-10


def test_zygmund_optimal_is_unit_radius_cap():
    for k in (1.0, 7.5, 64.0):
        z = zygmund_optimal(k)
        c = cap(k, 1.0)
        assert z.t_support == c.t_support
        assert np.array_equal(z.s, c.s)
        assert np.array_equal(z.v, c.v)


def test_alvino_matches_norms_and_moser_alias():
    for t in (math.pi, 10.0):
        for d in (math.e, math.exp(4.0)):
            p = alvino_extremal(t, d)
            assert dirichlet_norm_sq(p) == pytest.approx(1.0, rel=1e-14)
            assert rel_err(l2_norm_sq(p), alvino_l2_sq(t, d)) < 1e-13
    # with d = n on support pi the construction reproduces moser(n) bitwise
    m = moser(10)
    a = alvino_extremal(math.pi, 10.0)
    assert m.t_support == a.t_support
    assert np.array_equal(m.s, a.s)
    assert np.array_equal(m.v, a.v)


def test_modified_moser_norms():
    for n in (10, 10**4):
        p = modified_moser(n)
        table = modified_moser_norms(n)
        assert rel_err(dirichlet_norm_sq(p), table["dirichlet_sq"]) < 1e-12
        assert rel_err(l2_norm_sq(p), table["l2_sq"]) < 1e-12
        combined = dirichlet_norm_sq(p) + l2_norm_sq(p)
        assert rel_err(combined, table["sum_norm"] ** 2) < 1e-10 or combined <= 1.0
        assert table["sum_norm"] <= 1.0


def test_modified_moser_amplitude_transfer():
    # shrinking the amplitude by c rescales the exponent weight by c^2
    for n in (10, 1000):
        a = math.sqrt(moser_l2_sq(n))
        beta = 4.0 * math.pi
        lhs = tm_functional(modified_moser(n), beta, tol=1e-10).j_beta
        rhs = tm_functional(moser(n), beta * (1.0 - a) ** 2, tol=1e-10).j_beta
        assert rel_err(lhs, rhs) < 1e-9


def test_constructor_validation():
    with pytest.raises(ValueError):
        moser(1)
    with pytest.raises(ValueError):
        counterexample(2)
    with pytest.raises(ValueError):
        cap(0.5, 1.0)
    with pytest.raises(ValueError):
        cap(4.0, 0.0)
    with pytest.raises(ValueError):
        alvino_extremal(0.0, math.e)
    with pytest.raises(ValueError):
        alvino_extremal(math.pi, 1.0)


def test_sequence_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec("gaussian", {"n": 10})
    with pytest.raises(ValueError):
        SequenceSpec("cap", {"k": 4.0})
    spec = SequenceSpec("cap", {"k": 4.0, "r": 2.0})
    p = spec.build()
    assert p.t_support == pytest.approx(4.0 * math.pi, rel=1e-15)

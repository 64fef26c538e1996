"""Tests for the tangent directions, pairing matrices, and reports."""

import numpy as np
import pytest

from msindex import linalg
from msindex.errors import DomainError
from msindex.families import (
    SurfaceParam,
    deformation_data,
    integral_set,
    period_frame,
)
from msindex.moduli import (
    ZERO_TOL_FACTOR,
    analyze,
    eta,
    tangent_frame,
)


def _cmat(data):
    arr = np.asarray(data, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


def _split(rng):
    z = rng.standard_normal((2, 3, 3)) + 1j * rng.standard_normal((2, 3, 3))
    return z[0], z[1]


@pytest.fixture(scope="module")
def h_mid():
    return analyze(SurfaceParam("H", 0.5))


def test_p1_inverse_matches_fixture(oracle):
    defo = deformation_data(SurfaceParam("H", 0.5))
    inv = linalg.solve(defo.p1, np.eye(3))
    assert np.allclose(inv, _cmat(oracle["p1_inverse"]), atol=1e-13)


def test_first_tangent_direction_matches_fixture(oracle, h_mid):
    p = SurfaceParam("H", 0.5)
    tf = tangent_frame(h_mid.frame, deformation_data(p))
    want = _cmat(oracle["t1_H_a0.5"])
    got = tf.mats[0]
    assert got.shape == (3, 6)
    assert np.max(np.abs(got - want)) <= 1e-10 * np.max(np.abs(want))


def test_tangent_frame_has_nine_directions(h_mid):
    tf = tangent_frame(h_mid.frame, deformation_data(SurfaceParam("H", 0.5)))
    assert len(tf.mats) == 9
    assert all(m.shape == (3, 6) for m in tf.mats)
    # the sixth direction is the top period block itself
    assert np.array_equal(tf.mats[5], h_mid.frame.omega[:3, :])


def test_eta_hermitian_symmetry():
    rng = np.random.default_rng(7)
    for _ in range(10):
        x, y = (_split(rng), _split(rng))
        assert abs(eta(x, y) - np.conj(eta(y, x))) <= 1e-12
        assert abs(eta(x, x).imag) <= 1e-12


def test_eta_sesquilinear():
    rng = np.random.default_rng(11)
    x, y = (_split(rng), _split(rng))
    s = 0.8 - 1.7j
    sx = (s * x[0], s * x[1])
    sy = (s * y[0], s * y[1])
    assert abs(eta(sx, y) - s * eta(x, y)) <= 1e-12
    assert abs(eta(x, sy) - np.conj(s) * eta(x, y)) <= 1e-12


def test_key_matrix_structure(h_mid):
    km = h_mid.key
    assert km.w.shape == (9, 9)
    assert km.w1.shape == (18, 18)
    assert km.w2.shape == (18, 18)
    assert km.hermitian_defect <= 1e-12
    assert linalg.frobenius(km.w - km.w.conj().T) == 0.0
    assert np.array_equal(km.w1, km.w1.T)
    assert np.array_equal(km.w2, km.w2.T)
    assert np.array_equal(km.wdiff, km.w2 - km.w1)
    assert not np.iscomplexobj(km.w1)


def test_report_counts_and_relations(h_mid):
    r = h_mid.report
    assert r.p + r.q + r.nullity_E == 9
    assert r.kernel_dim_wdiff == 8
    assert not r.degenerate
    assert r.index_A == r.index_E
    assert r.nullity_A == r.nullity_E + 3
    assert r.index_E >= 1
    assert list(r.eig_w) == sorted(r.eig_w, reverse=True)
    assert list(r.eig_wdiff) == sorted(r.eig_wdiff, reverse=True)
    assert r.zero_tol_w == ZERO_TOL_FACTOR * max(abs(v) for v in r.eig_w)


def test_zero_tol_factor_is_recorded():
    r = analyze(SurfaceParam("tP", 14.0), zero_tol_factor=1e-3).report
    assert r.zero_tol_w == 1e-3 * max(abs(v) for v in r.eig_w)
    assert r.zero_tol_wdiff == 1e-3 * max(abs(v) for v in r.eig_wdiff)


def test_analyze_is_cached():
    assert analyze(SurfaceParam("H", 0.5)) is analyze(SurfaceParam("H", 0.5))


def test_delegation_shares_the_analysis():
    td = analyze(SurfaceParam("tD", -14.0))
    tp = analyze(SurfaceParam("tP", 14.0))
    assert td.report is tp.report
    assert td.key is tp.key
    assert td.param == SurfaceParam("tD", -14.0)
    assert td.canonical == SurfaceParam("tP", 14.0)

    neg = analyze(SurfaceParam("tCLP", -0.7))
    pos = analyze(SurfaceParam("tCLP", 0.7))
    assert neg.report is pos.report


def test_analyze_rejects_bad_parameters():
    with pytest.raises(DomainError):
        analyze(SurfaceParam("H", 2.0))
    with pytest.raises(DomainError):
        analyze(SurfaceParam("tP", 1.0))


def test_pipeline_pieces_agree_with_analyze(h_mid):
    # rebuilding by hand from the same integrals reproduces tau exactly
    p = SurfaceParam("H", 0.5)
    frame = period_frame(p, integral_set(p))
    assert np.array_equal(frame.tau, h_mid.frame.tau)

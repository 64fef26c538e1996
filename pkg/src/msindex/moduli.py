"""Second-variation spectra over the moduli of flat three-tori.

A nine-dimensional deformation space is spanned by five branch-point
motions and four lattice motions.  The Hermitian pairing eta of period
data gives a 9x9 key matrix whose signature classifies the surface,
and an 18x18 real comparison of actual against admissible periods
decides whether the classification is clean (kernel of dimension
exactly eight) or sits at a degeneration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import families, linalg
from .families import IntegralSet, PeriodFrame, QuadConfig, SurfaceParam

# relative factor fixing what counts as a zero eigenvalue
ZERO_TOL_FACTOR = 1e-7

# a clean spectrum has exactly this many zero directions in the
# 18x18 comparison matrix
_EXPECTED_KERNEL = 8


@dataclass(frozen=True)
class TangentFrame:
    """Nine 3x6 period derivatives, each split into left and right halves."""

    mats: tuple[np.ndarray, ...]

    def halves(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        m = self.mats[k]
        return m[:, :3], m[:, 3:]


_ROT_GENERATORS = (
    np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
    np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]),
    np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, -1.0, 0.0]]),
)


def tangent_frame(frame: PeriodFrame, defo: families.DeformationData) -> TangentFrame:
    """Assemble the nine tangent directions of the deformation space."""
    mats = [
        0.5 * (defo.p1 @ defo.p_ai(pt) @ defo.p2 @ frame.omega)
        for pt in defo.points
    ]
    top = frame.omega[:3, :].copy()
    mats.append(top)
    for g in _ROT_GENERATORS:
        mats.append(g @ top)
    return TangentFrame(mats=tuple(mats))


def eta(x: tuple[np.ndarray, np.ndarray], y: tuple[np.ndarray, np.ndarray]) -> complex:
    """Hermitian pairing of two period splits (Z1, Z2) and (W1, W2)."""
    z1, z2 = x
    w1, w2 = y
    return complex(-1j * np.trace(z2.T @ w1.conj() - z1.T @ w2.conj()))


@dataclass(frozen=True)
class KeyMatrices:
    w: np.ndarray          # 9x9 Hermitian
    w1: np.ndarray         # 18x18 real symmetric
    w2: np.ndarray         # 18x18 real symmetric
    wdiff: np.ndarray      # w2 - w1
    hermitian_defect: float


def _pair_all(cs: np.ndarray, ds: np.ndarray) -> np.ndarray:
    """Gram matrix of eta over stacked direction halves.

    tr(A^t conj(B)) is the plain elementwise sum of A * conj(B), so
    the full matrix reduces to two contractions.
    """
    return -1j * (
        np.einsum("iab,jab->ij", ds, cs.conj())
        - np.einsum("iab,jab->ij", cs, ds.conj())
    )


def key_matrices(tf: TangentFrame, tau: np.ndarray) -> KeyMatrices:
    """The 9x9 pairing matrix and the 18x18 period comparison.

    The admissible projection of a tangent direction with halves
    (C, D) is K = Re C + i (Re C Re tau - Re D) (Im tau)^-1 paired
    with K tau; the second batch applies the same projection to the
    direction rotated by i.
    """
    cs = np.stack([tf.mats[k][:, :3] for k in range(9)])
    ds = np.stack([tf.mats[k][:, 3:] for k in range(9)])

    w = _pair_all(cs, ds)
    defect = linalg.frobenius(w - w.conj().T)
    w = 0.5 * (w + w.conj().T)

    re_tau = tau.real
    im_inv = linalg.solve(tau.imag, np.eye(3))

    cu = np.concatenate([cs, 1j * cs])
    du = np.concatenate([ds, 1j * ds])
    k_all = cu.real + 1j * ((cu.real @ re_tau - du.real) @ im_inv)
    cv = k_all
    dv = k_all @ tau

    w1 = _pair_all(cu, du).real
    w2 = _pair_all(cv, dv).real
    w1 = 0.5 * (w1 + w1.T)
    w2 = 0.5 * (w2 + w2.T)
    return KeyMatrices(w=w, w1=w1, w2=w2, wdiff=w2 - w1, hermitian_defect=defect)


@dataclass(frozen=True)
class SpectralReport:
    """Signature data of one surface.

    index_E / nullity_E count constrained directions; the unconstrained
    (actual) problem adds three translations to the nullity and keeps
    the index.  degenerate means the 18x18 comparison kernel did not
    have the expected dimension, so the index formula is heuristic at
    this parameter.
    """

    eig_w: tuple[float, ...]
    eig_wdiff: tuple[float, ...]
    p: int
    q: int
    nullity_E: int
    kernel_dim_wdiff: int
    index_E: int
    index_A: int
    nullity_A: int
    degenerate: bool
    zero_tol_w: float
    zero_tol_wdiff: float


def spectral_report(km: KeyMatrices, zero_tol_factor: float = ZERO_TOL_FACTOR) -> SpectralReport:
    """Classify a surface from its key matrices.

    Genuine nullity always comes with extra zero directions in the
    18x18 comparison, so a small 9x9 eigenvalue only counts as zero
    when that kernel exceeds its structural dimension.  Without the
    corroboration the relative threshold misfires near parameter range
    ends, where the spectrum spreads over many orders of magnitude and
    stable eigenvalues dip below any fixed fraction of the largest.
    """
    ew = linalg.eig_selfadjoint(km.w, 0.0)
    zero_w = zero_tol_factor * max(abs(v) for v in ew.eigenvalues)

    ed = linalg.eig_selfadjoint(km.wdiff, 0.0)
    zero_d = zero_tol_factor * max(abs(v) for v in ed.eigenvalues)
    d_pos, d_neg, d_zero = linalg.count_signs(ed.eigenvalues, zero_d)

    degenerate = d_zero != _EXPECTED_KERNEL
    if degenerate:
        p, q, nullity = linalg.count_signs(ew.eigenvalues, zero_w)
    else:
        p, q, nullity = linalg.count_signs(ew.eigenvalues, 0.0)
    index_e = 1 + d_neg
    return SpectralReport(
        eig_w=ew.eigenvalues,
        eig_wdiff=ed.eigenvalues,
        p=p,
        q=q,
        nullity_E=nullity,
        kernel_dim_wdiff=d_zero,
        index_E=index_e,
        index_A=index_e,
        nullity_A=nullity + 3,
        degenerate=degenerate,
        zero_tol_w=zero_w,
        zero_tol_wdiff=zero_d,
    )


@dataclass(frozen=True)
class SurfaceAnalysis:
    """Everything computed for one (family, a) pair."""

    param: SurfaceParam
    canonical: SurfaceParam
    integrals: IntegralSet
    frame: PeriodFrame
    key: KeyMatrices
    report: SpectralReport


@lru_cache(maxsize=4096)
def _analyze_cached(family: str, a: float, rel_tol: float, max_level: int,
                    zero_tol_factor: float) -> SurfaceAnalysis:
    p = SurfaceParam(family, a)
    config = QuadConfig(target_rel_tol=rel_tol, max_level=max_level)
    integrals = families.integral_set(p, config)
    frame = families.period_frame(p, integrals, config)
    defo = families.deformation_data(p)
    tf = tangent_frame(frame, defo)
    km = key_matrices(tf, frame.tau)
    report = spectral_report(km, zero_tol_factor)
    return SurfaceAnalysis(param=p, canonical=p, integrals=integrals,
                           frame=frame, key=km, report=report)


def analyze(
    p: SurfaceParam,
    config: Optional[QuadConfig] = None,
    zero_tol_factor: float = ZERO_TOL_FACTOR,
) -> SurfaceAnalysis:
    """Full pipeline for one surface, cached on canonical parameters.

    tD and negative-parameter tCLP requests are folded first, so the
    delegated parameter returns the identical cached analysis object.
    """
    families.validate_param(p)
    q = families.canonical_param(p)
    cfg = config if config is not None else QuadConfig()
    result = _analyze_cached(q.family, q.a, cfg.target_rel_tol, cfg.max_level,
                             zero_tol_factor)
    if q != p:
        result = SurfaceAnalysis(param=p, canonical=q, integrals=result.integrals,
                                 frame=result.frame, key=result.key,
                                 report=result.report)
    return result

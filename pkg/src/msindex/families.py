"""The five surface families: domains, period integrals, period frames.

Every family is described by one real parameter a.  The quantities
A..I are singular integrals over branch-point data; they feed a 6x6
matrix of periods whose top half determines the lattice and the
period ratio tau.  All integrands are written so that each endpoint
singularity sits at offset zero of the quadrature engine's distance
coordinate, with cancellation-prone factors expanded by hand.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import linalg
from .errors import DomainError, NonConvergence, RiemannMatrixViolation
from .quadrature import Integrand, QuadConfig, integrate, integrate_tail

FAMILIES = ("H", "rPD", "tP", "tD", "tCLP")

# open-endpoint guard: parameters must keep this distance from the boundary
MARGIN = 1e-6

_SQ3 = math.sqrt(3.0)
_SQ2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SurfaceParam:
    family: str
    a: float


def domain_bounds(family: str) -> tuple[float, float, bool, bool]:
    """(lo, hi, closed_lo, closed_hi) for the admissible parameter range."""
    table = {
        "H": (0.0, 1.0, False, False),
        "rPD": (0.0, 1.0, False, True),
        "tP": (2.0, math.inf, False, False),
        "tD": (-math.inf, -2.0, False, False),
        "tCLP": (-2.0, 2.0, False, False),
    }
    if family not in table:
        raise DomainError(f"unknown family {family!r}, expected one of {FAMILIES}")
    return table[family]


def validate_param(p: SurfaceParam) -> None:
    lo, hi, closed_lo, closed_hi = domain_bounds(p.family)
    a = p.a
    if not math.isfinite(a):
        raise DomainError(f"parameter must be finite, got {a!r}")
    lo_ok = a >= lo if closed_lo else a >= lo + MARGIN
    hi_ok = a <= hi if closed_hi else a <= hi - MARGIN
    if math.isinf(hi):
        hi_ok = True
    if math.isinf(lo):
        lo_ok = True
    if not (lo_ok and hi_ok):
        lo_b = "[" if closed_lo else "("
        hi_b = "]" if closed_hi else ")"
        raise DomainError(
            f"family {p.family} needs a in {lo_b}{lo}, {hi}{hi_b} "
            f"with margin {MARGIN:g} at open ends; got {a!r}"
        )


def canonical_param(p: SurfaceParam) -> SurfaceParam:
    """Fold parameter symmetries onto the representative families.

    tD surfaces are conjugate to tP at the negated parameter, and the
    negative tCLP half-range repeats the positive one.
    """
    if p.family == "tD":
        return SurfaceParam("tP", -p.a)
    if p.family == "tCLP" and p.a < 0.0:
        return SurfaceParam("tCLP", -p.a)
    return p


@dataclass(frozen=True)
class IntegralSet:
    """The eight period integrals of one surface, plus provenance."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float
    H: float
    I: float
    family: str
    a: float
    err_max: float

    def as_dict(self) -> dict[str, float]:
        return {k: getattr(self, k) for k in "ABCDEFHI"}


class _Acc:
    """Accumulates (value, err) pairs from the quadrature engine."""

    def __init__(self, config: QuadConfig):
        self.config = config
        self.err_max = 0.0

    def run(self, f: Integrand) -> float:
        value, err = integrate(f, self.config)
        self.err_max = max(self.err_max, err)
        return value

    def run_tail(self, f: Integrand) -> float:
        value, err = integrate_tail(f, self.config)
        self.err_max = max(self.err_max, err)
        return value


def _integrals_H(a: float, config: QuadConfig) -> tuple[dict[str, float], float]:
    a3 = a ** 3
    ia3 = 1.0 / a3
    # (a^3 - 1)^2 / a^3 in a form that survives a -> 1
    c = ((a - 1.0) * (a * a + a + 1.0)) ** 2 / a3

    def rad(t):
        return (t ** 3 + a3) * (t ** 3 + ia3)

    def pol(s):
        # a^3 + 1/a^3 + 6x - 8x^3 at x = 1 - s
        return c + s * (18.0 - s * (24.0 - 8.0 * s))

    def span(s):
        # 1 - x^2 at x = 1 - s
        return s * (2.0 - s)

    acc = _Acc(config)
    vA = acc.run(Integrand(lambda t: (1.0 + t * t) / np.sqrt(t * rad(t)), 0.0, 1.0, singular_lo=True))
    vB1 = acc.run(Integrand(lambda t: (1.0 - t * t) / np.sqrt(t * rad(t)), 0.0, 1.0, singular_lo=True))
    vD = acc.run(Integrand(lambda t: t / np.sqrt(t * rad(t)), 0.0, 1.0, singular_lo=True))
    vE = acc.run(Integrand(lambda t: t ** 2.5 * (1.0 + t * t) / rad(t) ** 1.5, 0.0, 1.0, singular_lo=True))
    vF1 = acc.run(Integrand(lambda t: t ** 2.5 * (1.0 - t * t) / rad(t) ** 1.5, 0.0, 1.0, singular_lo=True))
    vI = acc.run(Integrand(lambda t: t ** 3.5 / rad(t) ** 1.5, 0.0, 1.0, singular_lo=True))

    def plain_pol(x):
        return a3 + ia3 + 6.0 * x - 8.0 * x ** 3

    vB2 = acc.run(Integrand(
        lambda x: x / np.sqrt(plain_pol(x) * (1.0 - x * x)), 0.5, 1.0, singular_hi=True,
        from_hi=lambda s: (1.0 - s) / np.sqrt(pol(s) * span(s))))
    vC = acc.run(Integrand(
        lambda x: 1.0 / np.sqrt(plain_pol(x) * (1.0 - x * x)), 0.5, 1.0, singular_hi=True,
        from_hi=lambda s: 1.0 / np.sqrt(pol(s) * span(s))))
    vF2 = acc.run(Integrand(
        lambda x: x / (plain_pol(x) ** 1.5 * np.sqrt(1.0 - x * x)), 0.5, 1.0, singular_hi=True,
        from_hi=lambda s: (1.0 - s) / (pol(s) ** 1.5 * np.sqrt(span(s)))))
    vH = acc.run(Integrand(
        lambda x: 1.0 / (plain_pol(x) ** 1.5 * np.sqrt(1.0 - x * x)), 0.5, 1.0, singular_hi=True,
        from_hi=lambda s: 1.0 / (pol(s) ** 1.5 * np.sqrt(span(s)))))

    vals = {
        "A": vA,
        "B": _SQ3 * vB1 + 4.0 * vB2,
        "C": 4.0 * vC,
        "D": 8.0 * vD,
        "E": vE,
        "F": _SQ3 * vF1 + 4.0 * vF2,
        "H": 2.0 * vH,
        "I": 4.0 * vI,
    }
    return vals, acc.err_max


def _rpd_parts(a: float):
    """Shared radicand pieces for the rPD integrals and identities."""
    a3 = a ** 3
    ia3 = 1.0 / a3
    a6 = a ** 6
    # 1 - a^6, factored so it survives a -> 1
    q = (1.0 - a) * (1.0 + a) * (1.0 + a * a + a ** 4)

    def main(t):
        return t * (1.0 - t ** 3) * (a3 * t ** 3 + ia3)

    def alt(t):
        return t * (1.0 - t ** 3) * (a3 + ia3 * t ** 3)

    def main_hi(s):
        # main radicand at t = 1 - s; 1 - t^3 = s (3 - 3s + s^2)
        t = 1.0 - s
        return t * s * (3.0 - s * (3.0 - s)) * (a3 * t ** 3 + ia3)

    def alt_hi(s):
        t = 1.0 - s
        return t * s * (3.0 - s * (3.0 - s)) * (a3 + ia3 * t ** 3)

    def tail_rad(t):
        return t * (t ** 3 - 1.0) * (a3 * t ** 3 + ia3)

    def tail_lo(s):
        # tail radicand at t = 1 + s; t^3 - 1 = s (s^2 + 3s + 3)
        t = 1.0 + s
        return t * s * (s * (s + 3.0) + 3.0) * (a3 * t ** 3 + ia3)

    return a3, ia3, a6, q, main, alt, main_hi, alt_hi, tail_rad, tail_lo


def _integrals_rPD(a: float, config: QuadConfig) -> tuple[dict[str, float], float]:
    a3, ia3, a6, q, main, alt, main_hi, alt_hi, tail_rad, tail_lo = _rpd_parts(a)
    acc = _Acc(config)

    vA = acc.run(Integrand(
        lambda t: (1.0 + (a * t) ** 2) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 + (a * (1.0 - s)) ** 2) / np.sqrt(main_hi(s))))
    vD = acc.run(Integrand(
        lambda t: t / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 - s) / np.sqrt(main_hi(s))))
    vEp = acc.run(Integrand(
        lambda t: (2.0 * a6 * t ** 3 + q) * (5.0 * (a * t) ** 2 + 1.0) / np.sqrt(main(t)),
        0.0, 1.0, True, True,
        from_hi=lambda s: (2.0 * a6 * (1.0 - s) ** 3 + q)
        * (5.0 * (a * (1.0 - s)) ** 2 + 1.0) / np.sqrt(main_hi(s))))
    vEm = acc.run(Integrand(
        lambda t: (2.0 * a6 * t ** 3 + q) * (5.0 * (a * t) ** 2 - 1.0) / np.sqrt(main(t)),
        0.0, 1.0, True, True,
        from_hi=lambda s: (2.0 * a6 * (1.0 - s) ** 3 + q)
        * (5.0 * (a * (1.0 - s)) ** 2 - 1.0) / np.sqrt(main_hi(s))))
    vH = acc.run(Integrand(
        lambda t: t * (q - 2.0 * t ** 3) / np.sqrt(alt(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 - s) * (q - 2.0 * (1.0 - s) ** 3) / np.sqrt(alt_hi(s))))
    vI = acc.run(Integrand(
        lambda t: t * (2.0 * a6 * t ** 3 + q) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 - s) * (2.0 * a6 * (1.0 - s) ** 3 + q) / np.sqrt(main_hi(s))))

    vTA = acc.run_tail(Integrand(
        lambda t: (1.0 + (a * t) ** 2) / np.sqrt(tail_rad(t)), 1.0, math.inf, singular_lo=True,
        from_lo=lambda s: (1.0 + (a * (1.0 + s)) ** 2) / np.sqrt(tail_lo(s))))
    vTC = acc.run_tail(Integrand(
        lambda t: t / np.sqrt(tail_rad(t)), 1.0, math.inf, singular_lo=True,
        from_lo=lambda s: (1.0 + s) / np.sqrt(tail_lo(s))))

    frac = a * a / (3.0 * (a6 + 1.0) ** 2)
    edge = 2.0 * a3 / (a6 + 1.0) ** 2
    vals = {
        "A": vA / (_SQ3 * a),
        "B": vTA / (_SQ3 * a),
        "C": 4.0 * vTC,
        "D": 4.0 * vD,
        "E": frac / _SQ3 * vEp,
        "F": frac * vEm,
        "H": edge * vH,
        "I": edge * vI,
    }
    return vals, acc.err_max


def _integrals_tP(a: float, config: QuadConfig) -> tuple[dict[str, float], float]:
    def quartic(t):
        t4 = t ** 4
        return t4 * t4 + a * t4 + 1.0

    def ridge(t):
        # 16 t^4 - 16 t^2 + 2 + a, grouped around its minimum
        return 16.0 * (t * t - 0.5) ** 2 + (a - 2.0)

    def flat(t):
        t2 = t * t
        return (2.0 + a) * t2 * t2 + (2.0 * a - 12.0) * t2 + (2.0 + a)

    acc = _Acc(config)
    unit = dict(lo=0.0, hi=1.0)
    vA1 = acc.run(Integrand(lambda t: (1.0 - t * t) / np.sqrt(quartic(t)), **unit))
    vA2 = acc.run(Integrand(lambda t: 1.0 / np.sqrt(ridge(t)), **unit))
    vB = acc.run(Integrand(lambda t: (1.0 + t * t) / np.sqrt(quartic(t)), **unit))
    vC = acc.run(Integrand(lambda t: t / np.sqrt(quartic(t)), **unit))
    vD = acc.run(Integrand(lambda t: 1.0 / np.sqrt(flat(t)), **unit))
    vE1 = acc.run(Integrand(lambda t: t ** 4 * (1.0 - t * t) / quartic(t) ** 1.5, **unit))
    vE2 = acc.run(Integrand(lambda t: 1.0 / ridge(t) ** 1.5, **unit))
    vF = acc.run(Integrand(lambda t: t ** 4 * (1.0 + t * t) / quartic(t) ** 1.5, **unit))
    vH = acc.run(Integrand(lambda t: t ** 5 / quartic(t) ** 1.5, **unit))
    vI = acc.run(Integrand(lambda t: (1.0 + t * t) ** 2 / flat(t) ** 1.5, **unit))

    vals = {
        "A": 2.0 * vA1 + 4.0 * vA2,
        "B": 2.0 * vB,
        "C": 8.0 * vC,
        "D": 8.0 * vD,
        "E": 2.0 * vE1 + 4.0 * vE2,
        "F": 2.0 * vF,
        "H": 4.0 * vH,
        "I": 4.0 * vI,
    }
    return vals, acc.err_max


def _integrals_tCLP(a: float, config: QuadConfig) -> tuple[dict[str, float], float]:
    a = abs(a)

    def plus(t):
        t4 = t ** 4
        return t4 * t4 + a * t4 + 1.0

    def minus(t):
        t4 = t ** 4
        return t4 * t4 - a * t4 + 1.0

    acc = _Acc(config)
    unit = dict(lo=0.0, hi=1.0)
    vA = acc.run(Integrand(lambda t: (1.0 + t * t) / np.sqrt(minus(t)), **unit))
    vB = acc.run(Integrand(lambda t: (1.0 + t * t) / np.sqrt(plus(t)), **unit))
    vC = acc.run(Integrand(lambda t: t / np.sqrt(plus(t)), **unit))
    vD = acc.run(Integrand(lambda t: t / np.sqrt(minus(t)), **unit))
    vE = acc.run(Integrand(lambda t: t ** 4 * (1.0 + t * t) / minus(t) ** 1.5, **unit))
    vF = acc.run(Integrand(lambda t: t ** 4 * (1.0 + t * t) / plus(t) ** 1.5, **unit))
    vH = acc.run(Integrand(lambda t: t ** 5 / plus(t) ** 1.5, **unit))
    vI = acc.run(Integrand(lambda t: t ** 5 / minus(t) ** 1.5, **unit))

    vals = {
        "A": 2.0 * _SQ2 * vA,
        "B": 2.0 * vB,
        "C": 8.0 * vC,
        "D": 8.0 * vD,
        "E": 2.0 * _SQ2 * vE,
        "F": 2.0 * vF,
        "H": 4.0 * vH,
        "I": 4.0 * vI,
    }
    return vals, acc.err_max


def integral_set(p: SurfaceParam, config: QuadConfig = QuadConfig()) -> IntegralSet:
    """Compute the eight period integrals of one surface.

    tD must be folded onto tP by canonical_param first.  For H the
    parameter may sit on either side of 1 (the two sides describe the
    same surface and give the same integrals); the other families are
    validated against their strict domains.
    """
    fam = p.family
    a = p.a
    if fam == "tD":
        raise DomainError("tD shares its integrals with tP; apply canonical_param first")
    if fam == "H":
        if not (math.isfinite(a) and a >= MARGIN and abs(a - 1.0) >= MARGIN):
            raise DomainError(f"H integrals need a > 0 with a != 1, margin {MARGIN:g}; got {a!r}")
        vals, err = _integrals_H(a, config)
    elif fam == "rPD":
        validate_param(p)
        vals, err = _integrals_rPD(a, config)
    elif fam == "tP":
        validate_param(p)
        vals, err = _integrals_tP(a, config)
    elif fam == "tCLP":
        validate_param(p)
        vals, err = _integrals_tCLP(a, config)
    else:
        raise DomainError(f"unknown family {fam!r}")
    return IntegralSet(family=fam, a=a, err_max=err, **vals)


# ---------------------------------------------------------------------------
# period frame


@dataclass(frozen=True)
class PeriodFrame:
    omega: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    tau: np.ndarray


def _omega_H(s: IntegralSet) -> np.ndarray:
    A, B, C, D, E, F, H, I = (s.A, s.B, s.C, s.D, s.E, s.F, s.H, s.I)
    r = _SQ3
    m = np.array([
        [0.0, (r / 2.0) * (A + 1j * B), 0.0, -r * A, -2.0 * r * A, -r * A],
        [2.0 * A, (-3.0 * A + 1j * B) / 2.0, A - 1j * B, 1j * B, 0.0, A],
        [-1j * D, -C, 2.0 * C + 1j * D, C, 0.0, 1j * D],
        [0.0, -(r / 2.0) * (E + 1j * F), 0.0, r * E, 2.0 * r * E, r * E],
        [-2.0 * E, (3.0 * E - 1j * F) / 2.0, -E + 1j * F, -1j * F, 0.0, -E],
        [1j * I, H, -2.0 * H - 1j * I, -H, 0.0, -1j * I],
    ], dtype=complex)
    return 1j * m


def _omega_rPD(s: IntegralSet) -> np.ndarray:
    A, B, C, D, E, F, H, I = (s.A, s.B, s.C, s.D, s.E, s.F, s.H, s.I)
    r = _SQ3
    m = np.array([
        [2j * B, -2.0 * (A + 1j * B), -(A + 1j * B), 2.0 * A, 3.0 * (A - 1j * B), 2.0 * (A - 1j * B)],
        [-2.0 * r * A, 0.0, r * (A + 1j * B), -2j * r * B, r * (A - 1j * B), 0.0],
        [1j * D, C - 1j * D, -C + 1j * D, -C, 0.0, -(C + 1j * D)],
        [-2j * F, 2.0 * (-E + 1j * F), -E + 1j * F, 2.0 * E, 3.0 * (E + 1j * F), 2.0 * (E + 1j * F)],
        [-2.0 * r * E, 0.0, r * (E - 1j * F), 2j * r * F, r * (E + 1j * F), 0.0],
        [1j * I, H - 1j * I, -H + 1j * I, -H, 0.0, -(H + 1j * I)],
    ], dtype=complex)
    return 1j * m


def _omega_tP(s: IntegralSet) -> np.ndarray:
    A, B, C, D, E, F, H, I = (s.A, s.B, s.C, s.D, s.E, s.F, s.H, s.I)
    return np.array([
        [-1j * B, -A, 1j * B, -1j * B, -2j * B, -1j * B],
        [A, 1j * B, -A, 1j * B, 0.0, -1j * B],
        [-1j * D, 1j * D, -1j * D, C, 0.0, C],
        [-1j * F, -E, 1j * F, -1j * F, -2j * F, -1j * F],
        [E, 1j * F, -E, 1j * F, 0.0, -1j * F],
        [-1j * I, 1j * I, -1j * I, H, 0.0, H],
    ], dtype=complex)


def _omega_tCLP(s: IntegralSet) -> np.ndarray:
    A, B, C, D, E, F, H, I = (s.A, s.B, s.C, s.D, s.E, s.F, s.H, s.I)
    return np.array([
        [-1j * B, 1j * B, 1j * B, 0.0, -A, -A],
        [-1j * B, -1j * B, 1j * B, A, A, 0.0],
        [-C, C, -C, -1j * D, 0.0, -1j * D],
        [-1j * F, 1j * F, 1j * F, 0.0, E, E],
        [-1j * F, -1j * F, 1j * F, -E, -E, 0.0],
        [-H, H, -H, 1j * I, 0.0, 1j * I],
    ], dtype=complex)


_OMEGA_BUILDERS = {
    "H": _omega_H,
    "rPD": _omega_rPD,
    "tP": _omega_tP,
    "tCLP": _omega_tCLP,
}

_TAU_SYM_TOL = 1e-9


def period_frame(
    p: SurfaceParam,
    integrals: Optional[IntegralSet] = None,
    config: QuadConfig = QuadConfig(),
) -> PeriodFrame:
    """Assemble the 6x6 period matrix and the period ratio tau.

    Raises RiemannMatrixViolation if tau comes out non-symmetric or
    its imaginary part is not positive definite.
    """
    q = canonical_param(p)
    if integrals is None:
        integrals = integral_set(q, config)
    builder = _OMEGA_BUILDERS.get(q.family)
    if builder is None:
        raise DomainError(f"no period table for family {q.family!r}")
    omega = builder(integrals)
    c1 = omega[:3, :3].copy()
    c2 = omega[:3, 3:].copy()
    tau = linalg.solve(c1, c2)

    sym_defect = linalg.frobenius(tau - tau.T)
    if sym_defect > _TAU_SYM_TOL * max(linalg.frobenius(tau), 1e-300):
        raise RiemannMatrixViolation(f"tau asymmetry {sym_defect:.3e}")
    im = 0.5 * (tau.imag + tau.imag.T)
    im_eigs = linalg.eig_selfadjoint(im, 0.0)
    if min(im_eigs.eigenvalues) <= 0.0:
        raise RiemannMatrixViolation(
            f"Im tau not positive definite, eigenvalues {im_eigs.eigenvalues}"
        )
    return PeriodFrame(omega=omega, c1=c1, c2=c2, tau=tau)


# ---------------------------------------------------------------------------
# deformation data

P1 = np.array([
    [1.0, 0.0, -1.0],
    [1j, 0.0, 1j],
    [0.0, 2.0, 0.0],
], dtype=complex)

P2 = np.array([
    [0.5, -0.5j, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.5, 0.0, 0.0, 0.0],
    [-0.5, -0.5j, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.5, -0.5j, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, 0.0, -0.5, -0.5j, 0.0],
], dtype=complex)


@dataclass(frozen=True)
class DeformationData:
    points: tuple[complex, ...]
    p1: np.ndarray
    p2: np.ndarray
    p_ai: Callable[[complex], np.ndarray]


def _p_ai_H(p: complex) -> np.ndarray:
    return np.array([
        [-5.0 / (6.0 * p), -0.5 / p ** 2, -1.0 / (6.0 * p ** 3),
         0.5 * (p ** 2 - p ** -4), 0.5 * (p - p ** -5), 0.5 * (1.0 - p ** -6)],
        [1.0 / 6.0, -0.5 / p, -1.0 / (6.0 * p ** 2),
         0.5 * (p ** 3 - p ** -3), 0.5 * (p ** 2 - p ** -4), 0.5 * (p - p ** -5)],
        [p / 6.0, 0.5, -1.0 / (6.0 * p),
         0.5 * (p ** 4 - p ** -2), 0.5 * (p ** 3 - p ** -3), 0.5 * (p ** 2 - p ** -4)],
    ], dtype=complex)


def _p_ai_rPD(p: complex) -> np.ndarray:
    return np.array([
        [-5.0 / (6.0 * p), -0.5 / p ** 2, -1.0 / (6.0 * p ** 3),
         0.5 * (p ** 2 + p ** -4), 0.5 * (p + p ** -5), 0.5 * (1.0 + p ** -6)],
        [1.0 / 6.0, -0.5 / p, -1.0 / (6.0 * p ** 2),
         0.5 * (p ** 3 + p ** -3), 0.5 * (p ** 2 + p ** -4), 0.5 * (p + p ** -5)],
        [p / 6.0, 0.5, -1.0 / (6.0 * p),
         0.5 * (p ** 4 + p ** -2), 0.5 * (p ** 3 + p ** -3), 0.5 * (p ** 2 + p ** -4)],
    ], dtype=complex)


def _p_ai_tetragonal(p: complex, a: float) -> np.ndarray:
    return np.array([
        [-0.75 / p, -0.5 / p ** 2, -0.25 / p ** 3,
         0.5 * a / p + p ** 3, 0.5 * a / p ** 2 + p ** 2, 0.5 * a / p ** 3 + p],
        [0.25, -0.5 / p, -0.25 / p ** 2,
         -0.5 * a - p ** -4, 0.5 * a / p + p ** 3, 0.5 * a / p ** 2 + p ** 2],
        [0.25 * p, 0.5, -0.25 / p,
         -0.5 * a * p - p ** -3, -0.5 * a - p ** -4, 0.5 * a / p + p ** 3],
    ], dtype=complex)


def _branch_points(fam: str, a: float) -> tuple[complex, ...]:
    if fam == "H":
        w = cmath.exp(2j * math.pi / 3.0)
        return (a + 0j, a * w, a * w.conjugate(), 1.0 / a + 0j, w / a)
    if fam == "rPD":
        w = cmath.exp(2j * math.pi / 3.0)
        return (a + 0j, a * w, a * w.conjugate(), -1.0 / a + 0j, -w / a)
    if fam == "tP":
        alpha = math.sqrt(0.5 * (math.sqrt(a + 2.0) + math.sqrt(a - 2.0)))
        e = cmath.exp(0.25j * math.pi)
        return (e * alpha, 1j * e * alpha, e.conjugate() * alpha,
                -1j * e.conjugate() * alpha, e / alpha)
    if fam == "tCLP":
        a = abs(a)
        # angle of -a/2 + i sqrt(4 - a^2)/2, a point on the unit circle
        angle = math.atan2(0.5 * math.sqrt((2.0 - a) * (2.0 + a)), -0.5 * a)
        z = cmath.exp(0.25j * angle)
        return (z, 1j * z, -z, -1j * z, z.conjugate())
    raise DomainError(f"no deformation points for family {fam!r}")


def _residual_scale(fam: str, a: float, z: complex) -> float:
    r = abs(z)
    if fam in ("tP", "tCLP"):
        return max(1.0, r ** 8 + abs(a) * r ** 4 + 1.0)
    a3 = a ** 3
    return max(1.0, r * (r ** 3 + a3) * (r ** 3 + 1.0 / a3))


def _curve_poly(fam: str, a: float, z: complex) -> complex:
    if fam == "H":
        return z * (z ** 3 - a ** 3) * (z ** 3 - a ** -3)
    if fam == "rPD":
        return z * (z ** 3 - a ** 3) * (z ** 3 + a ** -3)
    return z ** 8 + a * z ** 4 + 1.0


_ROOT_RESIDUAL_TOL = 1e-10
_POINT_SEPARATION = 1e-8


def deformation_data(p: SurfaceParam) -> DeformationData:
    """Branch points and constant matrices entering the tangent frame."""
    q = canonical_param(p)
    validate_param(q)
    fam, a = q.family, q.a
    pts = _branch_points(fam, a if fam != "tCLP" else abs(a))

    for z in pts:
        res = abs(_curve_poly(fam, a, z)) / _residual_scale(fam, a, z)
        if res > _ROOT_RESIDUAL_TOL:
            raise NonConvergence(f"branch point {z!r} has residual {res:.3e}")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= _POINT_SEPARATION:
                raise DomainError(f"branch points {pts[i]!r} and {pts[j]!r} collide")

    if fam == "H":
        p_ai = _p_ai_H
    elif fam == "rPD":
        p_ai = _p_ai_rPD
    else:
        p_ai = lambda z, _a=a: _p_ai_tetragonal(z, _a)
    return DeformationData(points=pts, p1=P1.copy(), p2=P2.copy(), p_ai=p_ai)


# ---------------------------------------------------------------------------
# integral identities


def _identities_H(a: float, config: QuadConfig):
    a3 = a ** 3
    ia3 = 1.0 / a3
    c = ((a - 1.0) * (a * a + a + 1.0)) ** 2 / a3
    d1 = 1.0 - a
    # 1/a^3 - a^3 = (1 - a^6)/a^3 and 1/a^3 - 1, both factored
    d0 = (1.0 - a) * (1.0 + a) * (1.0 + a * a + a ** 4) / a3
    d2 = (1.0 - a) * (1.0 + a + a * a) / a3

    acc = _Acc(config)

    def rad(t):
        return (t ** 3 + a3) * (t ** 3 + ia3)

    lhs1 = acc.run(Integrand(
        lambda t: (1.0 - (a * t) ** 2) / np.sqrt(t * (1.0 - t ** 3) * (ia3 - a3 * t ** 3)),
        0.0, 1.0, True, True,
        from_hi=lambda s: (d1 + a * s) * (1.0 + a - a * s)
        / np.sqrt((1.0 - s) * s * (3.0 - s * (3.0 - s)) * (d0 + a3 * s * (3.0 - s * (3.0 - s)))),
    )) / a
    rhs1 = 0.5 * _SQ3 * acc.run(Integrand(
        lambda t: (1.0 + t * t) / np.sqrt(t * rad(t)), 0.0, 1.0, singular_lo=True))

    lhs2 = acc.run(Integrand(
        lambda t: (1.0 - t * t) / np.sqrt(t * rad(t)), 0.0, 1.0, singular_lo=True))

    def mid_plain(t):
        rest = d2 + (1.0 - t) * (1.0 + t * (1.0 + t))
        return (1.0 - t) * (1.0 + t) / np.sqrt(t * (t ** 3 - a3) * rest)

    def mid_lo(s):
        t = a + s
        rest = d2 + (d1 - s) * (1.0 + t * (1.0 + t))
        return (d1 - s) * (1.0 + a + s) / np.sqrt(t * s * (t * t + a * t + a * a) * rest)

    v_mid = acc.run(Integrand(mid_plain, a, 1.0, singular_lo=True, from_lo=mid_lo))
    v_cap = acc.run(Integrand(
        lambda t: 1.0 / np.sqrt(c + 2.0 * (1.0 - t) * (2.0 * t + 1.0) ** 2), 0.5, 1.0))
    rhs2 = 2.0 * v_mid + 4.0 * v_cap

    return [
        ("H-identity-1", lhs1, rhs1, abs(lhs1 - rhs1)),
        ("H-identity-2", lhs2, rhs2, abs(lhs2 - rhs2)),
    ]


def _identities_rPD(a: float, config: QuadConfig):
    a3, ia3, a6, q, main, alt, main_hi, alt_hi, tail_rad, tail_lo = _rpd_parts(a)
    d1 = 1.0 - a
    acc = _Acc(config)

    bare_plus = acc.run(Integrand(
        lambda t: (1.0 + (a * t) ** 2) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 + (a * (1.0 - s)) ** 2) / np.sqrt(main_hi(s))))
    bare_minus = acc.run(Integrand(
        lambda t: (1.0 - a * t) * (1.0 + a * t) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (d1 + a * s) * (1.0 + a * (1.0 - s)) / np.sqrt(main_hi(s))))
    tail_plus = acc.run_tail(Integrand(
        lambda t: (1.0 + (a * t) ** 2) / np.sqrt(tail_rad(t)), 1.0, math.inf, singular_lo=True,
        from_lo=lambda s: (1.0 + (a * (1.0 + s)) ** 2) / np.sqrt(tail_lo(s))))
    tail_minus = acc.run_tail(Integrand(
        lambda t: (1.0 - a * t) * (1.0 + a * t) / np.sqrt(tail_rad(t)),
        1.0, math.inf, singular_lo=True,
        from_lo=lambda s: (d1 - a * s) * (1.0 + a * (1.0 + s)) / np.sqrt(tail_lo(s))))

    j5 = acc.run(Integrand(
        lambda t: t * t * (2.0 * a6 * t ** 3 + q) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 - s) ** 2 * (2.0 * a6 * (1.0 - s) ** 3 + q) / np.sqrt(main_hi(s))))
    j3 = acc.run(Integrand(
        lambda t: (2.0 * a6 * t ** 3 + q) / np.sqrt(main(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (2.0 * a6 * (1.0 - s) ** 3 + q) / np.sqrt(main_hi(s))))
    k3 = acc.run(Integrand(
        lambda t: (q - 2.0 * t ** 3) / np.sqrt(alt(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (q - 2.0 * (1.0 - s) ** 3) / np.sqrt(alt_hi(s))))
    k5 = acc.run(Integrand(
        lambda t: t * t * (q - 2.0 * t ** 3) / np.sqrt(alt(t)), 0.0, 1.0, True, True,
        from_hi=lambda s: (1.0 - s) ** 2 * (q - 2.0 * (1.0 - s) ** 3) / np.sqrt(alt_hi(s))))

    a2 = a * a
    out = []
    lhs = _SQ3 * bare_minus
    rhs = tail_plus
    out.append(("rPD-identity-1", lhs, rhs, abs(lhs - rhs)))
    lhs = _SQ3 * tail_minus
    rhs = -bare_plus
    out.append(("rPD-identity-2", lhs, rhs, abs(lhs - rhs)))
    lhs = -2.5 / _SQ3 * a2 * j5 + j3 / _SQ3
    rhs = 0.5 * a2 * k3
    out.append(("rPD-identity-3", lhs, rhs, abs(lhs - rhs)))
    lhs = -10.0 / _SQ3 * a2 * j5 + j3 / _SQ3
    rhs = 5.0 * k5
    out.append(("rPD-identity-4", lhs, rhs, abs(lhs - rhs)))
    return out


def verify_identities(p: SurfaceParam, config: QuadConfig = QuadConfig()):
    """Independently evaluate both sides of the family's exact relations.

    Returns a list of (name, lhs, rhs, |lhs - rhs|).  Only H and rPD
    have such relations; other families raise DomainError.
    """
    validate_param(p)
    if p.family == "H":
        return _identities_H(p.a, config)
    if p.family == "rPD":
        return _identities_rPD(p.a, config)
    raise DomainError(f"no integral identities for family {p.family}")

#!/usr/bin/env python3
"""Oracle fixture generator.

Computes reference values for the integral tables and a few matrix-chain
spot checks, entirely independently of the msindex package (this script
must not import it).  Every integral is evaluated by two unrelated
methods:

  1. scipy.integrate.quad (QUADPACK, adaptive Gauss-Kronrod /
     Clenshaw-Curtis with algebraic endpoint weights) at
     epsabs=1e-15 / epsrel=1e-13, with inverse-square-root endpoint
     factors passed through weight='alg' so QUADPACK treats them
     analytically, and with the explicit u = 1/t fold for tails;
  2. mpmath.quad (tanh-sinh at 50 decimal digits) applied to the
     integrand transcribed literally, singular endpoints and all.

The two values must agree to 5e-12 relative; the mpmath value (accurate
to far beyond double precision) is frozen into the fixture file.

Usage: python tools/generate_fixtures.py [out_path]
Default out path: tests/fixtures/oracle_values.json
"""

import json
import math
import sys
import warnings

import mpmath as mp
import numpy as np
from scipy.integrate import IntegrationWarning, quad

mp.mp.dps = 50

CROSS_RTOL = 5e-12


class OracleMismatch(Exception):
    pass


def _cross(name, v_scipy, v_mp):
    v_mpf = float(v_mp)
    denom = max(abs(v_mpf), 1e-30)
    rel = abs(v_scipy - v_mpf) / denom
    if rel > CROSS_RTOL:
        raise OracleMismatch(
            f"{name}: quadpack {v_scipy!r} vs mpmath {v_mpf!r} (rel {rel:.3e})"
        )
    return v_mpf


def _quad(f, lo, hi, weight=None, wvar=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        if weight is None:
            val, err = quad(f, lo, hi, epsabs=1e-15, epsrel=1e-13, limit=300)
        else:
            val, err = quad(
                f, lo, hi, weight=weight, wvar=wvar, epsabs=1e-15, epsrel=1e-13,
                limit=300,
            )
    return val


# ----------------------------------------------------------------------
# H family.  Curve w^2 = z(z^3-a^3)(z^3-1/a^3), a in (0,1).
#
# t-integrals carry radicand t(t^3+a^3)(t^3+1/a^3) (singular at t=0
# only); x-integrals run over [1/2, 1] with radicand
# (a^3+1/a^3+6x-8x^3)(1-x^2), singular at x=1 through the (1-x) factor.
# ----------------------------------------------------------------------

def integral_set_H(a):
    a3 = a ** 3
    ia3 = 1.0 / a3
    c = a3 + ia3

    def rad(t):
        return (t ** 3 + a3) * (t ** 3 + ia3)

    def radx(x):
        return (c + 6.0 * x - 8.0 * x ** 3) * (1.0 + x)

    # QUADPACK route: t^alpha and (1-x)^beta factors via weight='alg'.
    qA = _quad(lambda t: (1 + t * t) / math.sqrt(rad(t)), 0, 1,
               "alg", (-0.5, 0.0))
    qB1 = _quad(lambda t: (1 - t * t) / math.sqrt(rad(t)), 0, 1,
                "alg", (-0.5, 0.0))
    qB2 = _quad(lambda x: x / math.sqrt(radx(x)), 0.5, 1, "alg", (0.0, -0.5))
    qC = _quad(lambda x: 1.0 / math.sqrt(radx(x)), 0.5, 1, "alg", (0.0, -0.5))
    qD = _quad(lambda t: 1.0 / math.sqrt(rad(t)), 0, 1, "alg", (0.5, 0.0))
    qE = _quad(lambda t: (1 + t * t) / rad(t) ** 1.5, 0, 1, "alg", (2.5, 0.0))
    qF1 = _quad(lambda t: (1 - t * t) / rad(t) ** 1.5, 0, 1, "alg", (2.5, 0.0))
    # weight='alg' multiplies f by (b-x)^beta itself, so the explicit
    # factor below carries only the nonvanishing (1+x) half of (1-x^2).
    qF2 = _quad(lambda x: x / ((c + 6 * x - 8 * x ** 3) ** 1.5
                               * math.sqrt(1 + x)), 0.5, 1, "alg", (0.0, -0.5))
    qH = _quad(lambda x: 1.0 / ((c + 6 * x - 8 * x ** 3) ** 1.5
                                * math.sqrt(1 + x)), 0.5, 1, "alg", (0.0, -0.5))
    qI = _quad(lambda t: 1.0 / rad(t) ** 1.5, 0, 1, "alg", (3.5, 0.0))

    sq3 = math.sqrt(3.0)
    quadpack = {
        "A": qA, "B": sq3 * qB1 + 4 * qB2, "C": 4 * qC, "D": 8 * qD,
        "E": qE, "F": sq3 * qF1 + 4 * qF2, "H": 2 * qH, "I": 4 * qI,
    }

    # mpmath route: literal transcription, tanh-sinh soaks the endpoints.
    ma = mp.mpf(a)
    ma3 = ma ** 3
    mia3 = 1 / ma3
    mc = ma3 + mia3

    def mrad(t):
        return t * (t ** 3 + ma3) * (t ** 3 + mia3)

    def mpoly(x):
        return mc + 6 * x - 8 * x ** 3

    msq3 = mp.sqrt(3)
    mA = mp.quad(lambda t: (1 + t * t) / mp.sqrt(mrad(t)), [0, 1])
    mB = (msq3 * mp.quad(lambda t: (1 - t * t) / mp.sqrt(mrad(t)), [0, 1])
          + 4 * mp.quad(lambda x: x / mp.sqrt(mpoly(x) * (1 - x * x)),
                        [mp.mpf(1) / 2, 1]))
    mC = 4 * mp.quad(lambda x: 1 / mp.sqrt(mpoly(x) * (1 - x * x)),
                     [mp.mpf(1) / 2, 1])
    mD = 8 * mp.quad(lambda t: t / mp.sqrt(mrad(t)), [0, 1])
    mE = mp.quad(lambda t: (t ** 4 + t ** 6) / mp.sqrt(mrad(t)) ** 3, [0, 1])
    mF = (msq3 * mp.quad(lambda t: (t ** 4 - t ** 6) / mp.sqrt(mrad(t)) ** 3,
                         [0, 1])
          + 4 * mp.quad(lambda x: x / (mp.sqrt(mpoly(x)) ** 3
                                       * mp.sqrt(1 - x * x)),
                        [mp.mpf(1) / 2, 1]))
    mH = 2 * mp.quad(lambda x: 1 / (mp.sqrt(mpoly(x)) ** 3
                                    * mp.sqrt(1 - x * x)),
                     [mp.mpf(1) / 2, 1])
    mI = 4 * mp.quad(lambda t: t ** 5 / mp.sqrt(mrad(t)) ** 3, [0, 1])
    literal = {"A": mA, "B": mB, "C": mC, "D": mD,
               "E": mE, "F": mF, "H": mH, "I": mI}

    return {k: _cross(f"H[{a}].{k}", quadpack[k], literal[k])
            for k in quadpack}


# ----------------------------------------------------------------------
# rPD family.  Curve w^2 = z(z^3-a^3)(z^3+1/a^3), a in (0,1].
#
# [0,1] integrals: radicand t(1-t^3)(a^3 t^3+1/a^3), singular at both
# ends; H and the rPD-periods identities use the sibling radicand
# t(1-t^3)(a^3+t^3/a^3).  Tails over [1,oo) fold with u = 1/t.
# ----------------------------------------------------------------------

def _rpd_parts(a):
    a3 = a ** 3
    ia3 = 1.0 / a3
    a6 = a ** 6

    def s_main(t):      # (1+t+t^2)(a^3 t^3 + 1/a^3): nonvanishing factors
        return (1 + t + t * t) * (a3 * t ** 3 + ia3)

    def s_alt(t):       # (1+t+t^2)(a^3 + t^3/a^3)
        return (1 + t + t * t) * (a3 + t ** 3 * ia3)

    # u = 1/t fold of the tail radicand t(t^3-1)(a^3 t^3 + 1/a^3):
    # integrand factors become u^(-1/2) (1-u)^(-1/2) / sqrt((1+u+u^2)(a^3+u^3/a^3)).
    tailA = _quad(lambda u: (u * u + a * a) / math.sqrt(s_alt(u)), 0, 1,
                  "alg", (-0.5, -0.5))
    tailC = _quad(lambda u: 1.0 / math.sqrt(s_alt(u)), 0, 1,
                  "alg", (0.5, -0.5))

    qA = _quad(lambda t: (1 + a * a * t * t) / math.sqrt(s_main(t)), 0, 1,
               "alg", (-0.5, -0.5))
    qD = _quad(lambda t: 1.0 / math.sqrt(s_main(t)), 0, 1, "alg", (0.5, -0.5))
    qEF_p = _quad(
        lambda t: (2 * a6 * t ** 3 + 1 - a6) * (5 * a * a * t * t + 1)
        / math.sqrt(s_main(t)), 0, 1, "alg", (-0.5, -0.5))
    qEF_m = _quad(
        lambda t: (2 * a6 * t ** 3 + 1 - a6) * (5 * a * a * t * t - 1)
        / math.sqrt(s_main(t)), 0, 1, "alg", (-0.5, -0.5))
    qH = _quad(lambda t: (-2 * t ** 3 + 1 - a6) / math.sqrt(s_alt(t)), 0, 1,
               "alg", (0.5, -0.5))
    qI = _quad(lambda t: (2 * a6 * t ** 3 + 1 - a6) / math.sqrt(s_main(t)),
               0, 1, "alg", (0.5, -0.5))

    sq3 = math.sqrt(3.0)
    pref_EF = a * a / (3 * (a6 + 1) ** 2)
    quadpack = {
        "A": qA / (sq3 * a),
        "B": tailA / (sq3 * a),
        "C": 4 * tailC,
        "D": 4 * qD,
        "E": pref_EF / sq3 * qEF_p,
        "F": pref_EF * qEF_m,
        "H": 2 * a3 / (a6 + 1) ** 2 * qH,
        "I": 2 * a3 / (a6 + 1) ** 2 * qI,
        "tail_bare": tailA,
    }

    ma = mp.mpf(a)
    ma3, mia3, ma6 = ma ** 3, 1 / ma ** 3, ma ** 6
    msq3 = mp.sqrt(3)

    def mr_main(t):
        return t * (1 - t ** 3) * (ma3 * t ** 3 + mia3)

    def mr_alt(t):
        return t * (1 - t ** 3) * (ma3 + t ** 3 * mia3)

    def mr_tail(t):
        return t * (t ** 3 - 1) * (ma3 * t ** 3 + mia3)

    m_tailA = mp.quad(lambda t: (1 + ma * ma * t * t) / mp.sqrt(mr_tail(t)),
                      [1, mp.inf])
    m_tailC = mp.quad(lambda t: t / mp.sqrt(mr_tail(t)), [1, mp.inf])
    mA = mp.quad(lambda t: (1 + ma * ma * t * t) / mp.sqrt(mr_main(t)), [0, 1])
    mD = mp.quad(lambda t: t / mp.sqrt(mr_main(t)), [0, 1])
    mEF_p = mp.quad(
        lambda t: (2 * ma6 * t ** 3 + 1 - ma6) * (5 * ma * ma * t * t + 1)
        / mp.sqrt(mr_main(t)), [0, 1])
    mEF_m = mp.quad(
        lambda t: (2 * ma6 * t ** 3 + 1 - ma6) * (5 * ma * ma * t * t - 1)
        / mp.sqrt(mr_main(t)), [0, 1])
    mH = mp.quad(lambda t: (-2 * t ** 4 + (1 - ma6) * t) / mp.sqrt(mr_alt(t)),
                 [0, 1])
    mI = mp.quad(lambda t: (2 * ma6 * t ** 4 + (1 - ma6) * t)
                 / mp.sqrt(mr_main(t)), [0, 1])

    mpref = ma * ma / (3 * (ma6 + 1) ** 2)
    literal = {
        "A": mA / (msq3 * ma),
        "B": m_tailA / (msq3 * ma),
        "C": 4 * m_tailC,
        "D": 4 * mD,
        "E": mpref / msq3 * mEF_p,
        "F": mpref * mEF_m,
        "H": 2 * ma3 / (ma6 + 1) ** 2 * mH,
        "I": 2 * ma3 / (ma6 + 1) ** 2 * mI,
        "tail_bare": m_tailA,
    }

    return {k: _cross(f"rPD[{a}].{k}", quadpack[k], literal[k])
            for k in quadpack}


def integral_set_rPD(a):
    vals = _rpd_parts(a)
    vals.pop("tail_bare")
    return vals


def rpd_tail_bare(a):
    return _rpd_parts(a)["tail_bare"]


# ----------------------------------------------------------------------
# tP family (a > 2) and tCLP family (0 <= a < 2): quartic curve
# w^2 = z^8 + a z^4 + 1.  All printed integrands are smooth on [0,1].
# ----------------------------------------------------------------------

def integral_set_tP(a):
    def pQ(t):
        return t ** 8 + a * t ** 4 + 1

    def p16(t):
        return 16 * t ** 4 - 16 * t * t + 2 + a

    def pD(t):
        return (2 + a) * t ** 4 + (2 * a - 12) * t * t + 2 + a

    quadpack = {
        "A": 2 * _quad(lambda t: (1 - t * t) / math.sqrt(pQ(t)), 0, 1)
        + 4 * _quad(lambda t: 1 / math.sqrt(p16(t)), 0, 1),
        "B": 2 * _quad(lambda t: (1 + t * t) / math.sqrt(pQ(t)), 0, 1),
        "C": 8 * _quad(lambda t: t / math.sqrt(pQ(t)), 0, 1),
        "D": 8 * _quad(lambda t: 1 / math.sqrt(pD(t)), 0, 1),
        "E": 2 * _quad(lambda t: (t ** 4 - t ** 6) / pQ(t) ** 1.5, 0, 1)
        + 4 * _quad(lambda t: 1 / p16(t) ** 1.5, 0, 1),
        "F": 2 * _quad(lambda t: (t ** 4 + t ** 6) / pQ(t) ** 1.5, 0, 1),
        "H": 4 * _quad(lambda t: t ** 5 / pQ(t) ** 1.5, 0, 1),
        "I": 4 * _quad(lambda t: (1 + t * t) ** 2 / pD(t) ** 1.5, 0, 1),
    }

    ma = mp.mpf(a)

    def mQ(t):
        return t ** 8 + ma * t ** 4 + 1

    def m16(t):
        return 16 * t ** 4 - 16 * t * t + 2 + ma

    def mD_(t):
        return (2 + ma) * t ** 4 + (2 * ma - 12) * t * t + 2 + ma

    literal = {
        "A": 2 * mp.quad(lambda t: (1 - t * t) / mp.sqrt(mQ(t)), [0, 1])
        + 4 * mp.quad(lambda t: 1 / mp.sqrt(m16(t)), [0, 1]),
        "B": 2 * mp.quad(lambda t: (1 + t * t) / mp.sqrt(mQ(t)), [0, 1]),
        "C": 8 * mp.quad(lambda t: t / mp.sqrt(mQ(t)), [0, 1]),
        "D": 8 * mp.quad(lambda t: 1 / mp.sqrt(mD_(t)), [0, 1]),
        "E": 2 * mp.quad(lambda t: (t ** 4 - t ** 6) / mp.sqrt(mQ(t)) ** 3,
                         [0, 1])
        + 4 * mp.quad(lambda t: 1 / mp.sqrt(m16(t)) ** 3, [0, 1]),
        "F": 2 * mp.quad(lambda t: (t ** 4 + t ** 6) / mp.sqrt(mQ(t)) ** 3,
                         [0, 1]),
        "H": 4 * mp.quad(lambda t: t ** 5 / mp.sqrt(mQ(t)) ** 3, [0, 1]),
        "I": 4 * mp.quad(lambda t: (1 + t * t) ** 2 / mp.sqrt(mD_(t)) ** 3,
                         [0, 1]),
    }
    return {k: _cross(f"tP[{a}].{k}", quadpack[k], literal[k])
            for k in quadpack}


def integral_set_tCLP(a):
    def pP(t):
        return t ** 8 + a * t ** 4 + 1

    def pM(t):
        return t ** 8 - a * t ** 4 + 1

    s2 = math.sqrt(2.0)
    quadpack = {
        "A": 2 * s2 * _quad(lambda t: (1 + t * t) / math.sqrt(pM(t)), 0, 1),
        "B": 2 * _quad(lambda t: (1 + t * t) / math.sqrt(pP(t)), 0, 1),
        "C": 8 * _quad(lambda t: t / math.sqrt(pP(t)), 0, 1),
        "D": 8 * _quad(lambda t: t / math.sqrt(pM(t)), 0, 1),
        "E": 2 * s2 * _quad(lambda t: (t ** 4 + t ** 6) / pM(t) ** 1.5, 0, 1),
        "F": 2 * _quad(lambda t: (t ** 4 + t ** 6) / pP(t) ** 1.5, 0, 1),
        "H": 4 * _quad(lambda t: t ** 5 / pP(t) ** 1.5, 0, 1),
        "I": 4 * _quad(lambda t: t ** 5 / pM(t) ** 1.5, 0, 1),
    }

    ma = mp.mpf(a)
    ms2 = mp.sqrt(2)

    def mP(t):
        return t ** 8 + ma * t ** 4 + 1

    def mM(t):
        return t ** 8 - ma * t ** 4 + 1

    literal = {
        "A": 2 * ms2 * mp.quad(lambda t: (1 + t * t) / mp.sqrt(mM(t)), [0, 1]),
        "B": 2 * mp.quad(lambda t: (1 + t * t) / mp.sqrt(mP(t)), [0, 1]),
        "C": 8 * mp.quad(lambda t: t / mp.sqrt(mP(t)), [0, 1]),
        "D": 8 * mp.quad(lambda t: t / mp.sqrt(mM(t)), [0, 1]),
        "E": 2 * ms2 * mp.quad(lambda t: (t ** 4 + t ** 6)
                               / mp.sqrt(mM(t)) ** 3, [0, 1]),
        "F": 2 * mp.quad(lambda t: (t ** 4 + t ** 6) / mp.sqrt(mP(t)) ** 3,
                         [0, 1]),
        "H": 4 * mp.quad(lambda t: t ** 5 / mp.sqrt(mP(t)) ** 3, [0, 1]),
        "I": 4 * mp.quad(lambda t: t ** 5 / mp.sqrt(mM(t)) ** 3, [0, 1]),
    }
    return {k: _cross(f"tCLP[{a}].{k}", quadpack[k], literal[k])
            for k in quadpack}


# ----------------------------------------------------------------------
# eq-rPD101 at the closed domain end a=1, both sides.
# ----------------------------------------------------------------------

def rpd101_at_one():
    lhs_m = mp.sqrt(3) * mp.quad(
        lambda t: (1 - t * t) / mp.sqrt(t * (t ** 3 - 1) * (t ** 3 + 1)),
        [1, mp.inf])
    rhs_m = -mp.quad(
        lambda t: (1 + t * t) / mp.sqrt(t * (1 - t ** 3) * (t ** 3 + 1)),
        [0, 1])
    # QUADPACK cross-check after u = 1/t on the left side.
    lhs_q = math.sqrt(3) * _quad(
        lambda u: (u * u - 1) / math.sqrt((1 + u + u * u) * (1 + u ** 3)),
        0, 1, "alg", (-0.5, -0.5))
    rhs_q = -_quad(
        lambda t: (1 + t * t) / math.sqrt((1 + t + t * t) * (1 + t ** 3)),
        0, 1, "alg", (-0.5, -0.5))
    return {"lhs": _cross("rPD101.lhs", lhs_q, lhs_m),
            "rhs": _cross("rPD101.rhs", rhs_q, rhs_m)}


# ----------------------------------------------------------------------
# Matrix-chain spot checks: second, independent evaluation of the
# tangent-vector chain T1 = (1/2) P1 P_{a1} P2 Omega for H at a=0.5,
# and the closed-form inverse of P1.
# ----------------------------------------------------------------------

P1 = np.array([[1, 0, -1], [1j, 0, 1j], [0, 2, 0]], dtype=complex)

P2 = np.array([
    [0.5, -0.5j, 0, 0, 0, 0],
    [0, 0, 0.5, 0, 0, 0],
    [-0.5, -0.5j, 0, 0, 0, 0],
    [0, 0, 0, 0.5, -0.5j, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, -0.5, -0.5j, 0],
], dtype=complex)


def p_ai_H(p):
    return np.array([
        [-5 / (6 * p), -1 / (2 * p ** 2), -1 / (6 * p ** 3),
         (p ** 2 - p ** -4) / 2, (p - p ** -5) / 2, (1 - p ** -6) / 2],
        [1 / 6, -1 / (2 * p), -1 / (6 * p ** 2),
         (p ** 3 - p ** -3) / 2, (p ** 2 - p ** -4) / 2, (p - p ** -5) / 2],
        [p / 6, 0.5, -1 / (6 * p),
         (p ** 4 - p ** -2) / 2, (p ** 3 - p ** -3) / 2, (p ** 2 - p ** -4) / 2],
    ], dtype=complex)


def omega_H(v):
    A, B, C, D = v["A"], v["B"], v["C"], v["D"]
    E, F, Hh, Ii = v["E"], v["F"], v["H"], v["I"]
    s3 = math.sqrt(3.0)
    m = np.array([
        [0, s3 / 2 * (A + 1j * B), 0, -s3 * A, -2 * s3 * A, -s3 * A],
        [2 * A, (-3 * A + 1j * B) / 2, A - 1j * B, 1j * B, 0, A],
        [-1j * D, -C, 2 * C + 1j * D, C, 0, 1j * D],
        [0, -s3 / 2 * (E + 1j * F), 0, s3 * E, 2 * s3 * E, s3 * E],
        [-2 * E, (3 * E - 1j * F) / 2, -E + 1j * F, -1j * F, 0, -E],
        [1j * Ii, Hh, -2 * Hh - 1j * Ii, -Hh, 0, -1j * Ii],
    ], dtype=complex)
    return 1j * m


def t1_H(a, vals):
    om = omega_H(vals)
    return 0.5 * P1 @ p_ai_H(complex(a)) @ P2 @ om


def cmat(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/oracle_values.json"

    sets = {"H": {}, "rPD": {}, "tP": {}, "tCLP": {}}
    for a in (0.3, 0.5, 0.8):
        sets["H"][repr(a)] = integral_set_H(a)
        print(f"H a={a}: ok")
    for a in (0.3, 0.5, 0.7, 1.0 / math.sqrt(2.0), 1.0):
        sets["rPD"][repr(a)] = integral_set_rPD(a)
        print(f"rPD a={a}: ok")
    for a in (7.0, 14.0, 30.0):
        sets["tP"][repr(a)] = integral_set_tP(a)
        print(f"tP a={a}: ok")
    for a in (0.0, 0.5, 1.5):
        sets["tCLP"][repr(a)] = integral_set_tCLP(a)
        print(f"tCLP a={a}: ok")

    tail = rpd_tail_bare(0.5)
    print(f"rPD bare tail a=0.5: {tail!r}")

    rpd101 = rpd101_at_one()
    print(f"eq-rPD101 at a=1: lhs={rpd101['lhs']!r} rhs={rpd101['rhs']!r}")
    if abs(rpd101["lhs"] - rpd101["rhs"]) > 1e-12:
        raise OracleMismatch("eq-rPD101 sides disagree at a=1")

    p1_inv = np.linalg.inv(P1)
    closed = np.array([[0.5, -0.5j, 0], [0, 0, 0.5], [-0.5, -0.5j, 0]],
                      dtype=complex)
    if not np.allclose(p1_inv, closed, atol=1e-14):
        raise OracleMismatch("P1 inverse does not match the closed form")

    t1 = t1_H(0.5, sets["H"][repr(0.5)])

    fixtures = {
        "meta": {
            "generator": "tools/generate_fixtures.py",
            "method": ("QUADPACK adaptive (weight='alg', epsabs=1e-15, "
                       "epsrel=1e-13) cross-checked against mpmath tanh-sinh "
                       "at 50 digits; mpmath value frozen"),
            "cross_check_rtol": CROSS_RTOL,
            "complex_format": "[re, im]",
        },
        "integral_sets": sets,
        "rpd_tail_bare": {"0.5": tail},
        "rpd101_at_a1": rpd101,
        "p1_inverse": cmat(closed),
        "t1_H_a0.5": cmat(t1),
    }

    with open(out_path, "w") as fh:
        json.dump(fixtures, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main()

"""Interval classification of a surface family.

A sweep samples the admissible parameter range on a uniform grid,
watches the eigenvalue of the key matrix nearest zero, and brackets
every parameter where the spectrum degenerates.  Brackets are refined
by bisection, and the refined roots cut the window into intervals of
constant signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from collections import Counter
from typing import Optional

from . import moduli
from .errors import DomainError, UnresolvedTransition
from .families import MARGIN, QuadConfig, SurfaceParam, domain_bounds, validate_param

_MIN_STEPS = 16
_MAX_BISECTIONS = 80

# a refined root must pull an eigenvalue at least this far toward zero
# relative to the largest one
_ROOT_DEPTH_FACTOR = 1e-5

# windows used by the reproduction command; the unbounded families are
# cut off past the last known transition
DEFAULT_WINDOWS = {
    "H": (0.01, 0.99),
    "rPD": (0.01, 1.0),
    "tP": (2.1, 40.0),
    "tD": (-40.0, -2.1),
    "tCLP": (-1.99, 1.99),
}


@dataclass(frozen=True)
class SweepConfig:
    a_min: float
    a_max: float
    steps: int = 200
    refine_tol: float = 1e-9
    quad: QuadConfig = field(default_factory=QuadConfig)
    zero_tol_factor: float = moduli.ZERO_TOL_FACTOR

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a_min) and math.isfinite(self.a_max)):
            raise DomainError("sweep window must be finite")
        if not self.a_min < self.a_max:
            raise DomainError(
                f"empty sweep window [{self.a_min}, {self.a_max}]")
        if self.steps < _MIN_STEPS:
            raise DomainError(f"steps must be at least {_MIN_STEPS}")
        if not self.refine_tol > 0.0:
            raise DomainError("refine_tol must be positive")


@dataclass(frozen=True)
class SweepSample:
    """Pipeline output at one grid point, reduced to sweep currency."""

    a: float
    det_w: float
    min_abs_eig_w: float
    p: int
    q: int
    nullity_E: int
    index_E: int

    @property
    def signature_class(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.index_E)


@dataclass(frozen=True)
class Transition:
    a_star: float
    nullity_at: int
    left_class: tuple[int, int, int]
    right_class: tuple[int, int, int]


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    p: int
    q: int
    index_E: int
    index_A: int
    nullity_A: int


@dataclass(frozen=True)
class SweepReport:
    family: str
    config: SweepConfig
    samples: tuple[SweepSample, ...]
    transitions: tuple[Transition, ...]
    intervals: tuple[Interval, ...]


def _probe(family: str, a: float,
           cfg: SweepConfig) -> tuple[SweepSample, float, int]:
    """Evaluate the pipeline at a.

    Returns the sample, the signed eigenvalue of the key matrix
    nearest zero, and the raw count of strictly negative eigenvalues.
    The raw count ignores the zero threshold entirely, so it jumps
    exactly where an eigenvalue crosses zero and nowhere else.
    """
    report = moduli.analyze(
        SurfaceParam(family, a),
        config=cfg.quad,
        zero_tol_factor=cfg.zero_tol_factor,
    ).report
    nearest = min(report.eig_w, key=abs)
    det = 1.0
    for v in report.eig_w:
        det *= v
    sample = SweepSample(
        a=a,
        det_w=det,
        min_abs_eig_w=abs(nearest),
        p=report.p,
        q=report.q,
        nullity_E=report.nullity_E,
        index_E=report.index_E,
    )
    q_raw = sum(1 for v in report.eig_w if v < 0.0)
    return sample, nearest, q_raw


def _grid(family: str, cfg: SweepConfig) -> list[float]:
    lo_b, hi_b, closed_lo, closed_hi = domain_bounds(family)
    lo = cfg.a_min
    hi = cfg.a_max
    if math.isfinite(lo_b):
        floor = lo_b if closed_lo else lo_b + MARGIN
        lo = max(lo, floor)
    if math.isfinite(hi_b):
        ceil = hi_b if closed_hi else hi_b - MARGIN
        hi = min(hi, ceil)
    if not lo < hi:
        raise DomainError(
            f"window [{cfg.a_min}, {cfg.a_max}] misses the {family} domain")
    validate_param(SurfaceParam(family, lo))
    validate_param(SurfaceParam(family, hi))
    n = cfg.steps
    pts = [lo + (hi - lo) * k / n for k in range(n + 1)]
    # the affine form can overshoot hi by one ulp, which would put the
    # last probe outside a clamped domain edge
    pts[-1] = hi
    return pts


def _sign(x: float) -> float:
    return math.copysign(1.0, x)


def _refine(family: str, cfg: SweepConfig,
            s_lo: SweepSample, q_lo: int,
            s_hi: SweepSample, q_hi: int) -> Optional[Transition]:
    """Bisect one bracket down to refine_tol.

    Bisection follows the raw negative count, which changes exactly at
    eigenvalue crossings.  Two kinds of spurious bracket come back as
    None: the nearest-zero slot changing holders between stable
    eigenvalues of opposite signs (nothing crosses), and a thresholded
    class changing because an eigenvalue drifted across the zero band
    without a sign change (extreme parameters, wide spectra).  A real
    crossing changes both the raw count and the class.
    """
    left_class = s_lo.signature_class
    right_class = s_hi.signature_class
    if q_lo == q_hi or left_class == right_class:
        return None

    lo, hi = s_lo.a, s_hi.a
    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= cfg.refine_tol:
            break
        mid = 0.5 * (lo + hi)
        _, _, q_mid = _probe(family, mid, cfg)
        if q_mid == q_lo:
            lo = mid
        else:
            hi = mid
    else:
        raise UnresolvedTransition(
            f"{family}: bracket [{s_lo.a}, {s_hi.a}] did not narrow to "
            f"{cfg.refine_tol} in {_MAX_BISECTIONS} bisections")

    a_star = 0.5 * (lo + hi)
    at = moduli.analyze(
        SurfaceParam(family, a_star),
        config=cfg.quad,
        zero_tol_factor=cfg.zero_tol_factor,
    ).report
    depth = min(abs(v) for v in at.eig_w)
    scale = max(abs(v) for v in at.eig_w)
    if depth > _ROOT_DEPTH_FACTOR * scale:
        raise UnresolvedTransition(
            f"{family}: sign counts change over [{s_lo.a}, {s_hi.a}] but "
            f"no eigenvalue of the key matrix reaches zero near {a_star} "
            f"(smallest {depth:.3e} vs scale {scale:.3e}); rerun with "
            f"more steps")
    return Transition(
        a_star=a_star,
        nullity_at=at.nullity_E,
        left_class=left_class,
        right_class=right_class,
    )


def sweep(family: str, cfg: SweepConfig) -> SweepReport:
    """Classify one family over a window.

    Transition brackets open where the signed nearest-zero eigenvalue
    flips sign between adjacent grid points, or where the signature
    class changes without a visible flip (an even-multiplicity crossing
    keeps the determinant's sign).
    """
    grid = _grid(family, cfg)
    samples: list[SweepSample] = []
    signed: list[float] = []
    q_raw: list[int] = []
    for a in grid:
        sample, eig, q = _probe(family, a, cfg)
        samples.append(sample)
        signed.append(eig)
        q_raw.append(q)

    transitions: list[Transition] = []
    for k in range(len(samples) - 1):
        s0, s1 = samples[k], samples[k + 1]
        flip = _sign(signed[k]) != _sign(signed[k + 1])
        changed = s0.signature_class != s1.signature_class
        if flip or changed or q_raw[k] != q_raw[k + 1]:
            found = _refine(family, cfg, s0, q_raw[k], s1, q_raw[k + 1])
            if found is not None:
                transitions.append(found)
    transitions.sort(key=lambda t: t.a_star)
    # a root landing on a grid point refines from both flanking cells
    pruned: list[Transition] = []
    for t in transitions:
        if pruned and t.a_star - pruned[-1].a_star <= 10.0 * cfg.refine_tol:
            continue
        pruned.append(t)
    transitions = pruned

    cuts = [grid[0]] + [t.a_star for t in transitions] + [grid[-1]]
    intervals: list[Interval] = []
    for k in range(len(cuts) - 1):
        lo, hi = cuts[k], cuts[k + 1]
        inside = [s for s in samples if lo < s.a < hi and s.nullity_E == 0]
        if not inside:
            inside = [_probe(family, 0.5 * (lo + hi), cfg)[0]]
        majority, _ = Counter(s.signature_class for s in inside).most_common(1)[0]
        p, q, index_e = majority
        nullity = Counter(
            s.nullity_E for s in inside if s.signature_class == majority
        ).most_common(1)[0][0]
        intervals.append(Interval(
            lo=lo,
            hi=hi,
            p=p,
            q=q,
            index_E=index_e,
            index_A=index_e,
            nullity_A=nullity + 3,
        ))

    return SweepReport(
        family=family,
        config=cfg,
        samples=tuple(samples),
        transitions=tuple(transitions),
        intervals=tuple(intervals),
    )


def classify_at(
    family: str,
    a: float,
    neighborhood: float = 1e-4,
    config: Optional[QuadConfig] = None,
    zero_tol_factor: float = moduli.ZERO_TOL_FACTOR,
) -> tuple[moduli.SpectralReport, int]:
    """Report at one parameter plus the index inferred by continuity.

    At a degeneration the constrained index drops by the incoming
    nullity; flanking evaluations recover the limiting value, taken as
    the smaller of the two one-sided indices (they agree away from a
    transition).
    """
    if not neighborhood > 0.0:
        raise DomainError("neighborhood must be positive")
    validate_param(SurfaceParam(family, a))
    report = moduli.analyze(
        SurfaceParam(family, a), config=config,
        zero_tol_factor=zero_tol_factor,
    ).report

    flank_indices: list[int] = []
    for side in (a - neighborhood, a + neighborhood):
        try:
            validate_param(SurfaceParam(family, side))
        except DomainError:
            continue
        flank = moduli.analyze(
            SurfaceParam(family, side), config=config,
            zero_tol_factor=zero_tol_factor,
        ).report
        flank_indices.append(flank.index_E)
    if not flank_indices:
        raise DomainError(
            f"no admissible flanking parameter within {neighborhood} of {a}")
    return report, min(flank_indices)

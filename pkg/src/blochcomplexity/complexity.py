"""Accessed and accessible parametric volumes of a sampled evolution, the
complexity measure built from their ratio, and the complexity length scale.

The instantaneous volume at time t is the area, under the metric density
sin(theta)/4, of the angular rectangle spanned between the start point
(theta_A, phi_A) and the current point (theta(t), phi(t)):

    V(t) = |(cos(theta_A) - cos(theta(t))) * (phi(t) - phi_A)| / 4.

The accessed volume is a time average of V(t); the accessible volume is the
same density integrated over the bounding box [theta_min, theta_max] x
[phi_min, phi_max] swept by the trajectory. Complexity is the deficit ratio
C = (V_max - V̄)/V_max, and the length scale is L_C = s/sqrt(1 - C).

Evolutions confined to a parallel (constant theta) or a meridian (constant
phi) have a degenerate rectangle; a dedicated convention replaces the
vanishing factor so that both degenerate cases give V(t) = |moving extent|/2
and V_max = (total extent)/2. Reports flag when this convention is active.

Two time-averaging modes exist. ``uniform`` averages V(t) over the full
duration. ``appendix_piecewise`` splits the duration at the instants where
the period-pi principal-arctangent representation of the azimuth changes
branch (a sign crossing of Re c0 or Re c1) and sums the per-segment
averages. The piecewise mode is the one that reproduces the reference
volume table and is the default; the README records the per-alpha deltas of
the uniform mode.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveVolume, QuadratureNotConverged
from .hamiltonians import evolution_time, suboptimal_field
from .metrics import (curvature_coefficient, geodesic_efficiency, path_length,
                      speed_efficiency)
from .numerics import (bisect_root, golden_section_max, golden_section_min,
                       simpson_uniform)
from .trajectory import (AZIMUTH_POLE_EPS, DEFAULT_SAMPLES,
                         angles_from_states, sample_trajectory,
                         state_evaluator)

# angular extent below which an axis of the bounding box counts as degenerate
EPS_DEGENERATE = 1e-9

# step-doubling must move the accessed volume by less than this
RICHARDSON_TOL = 1e-7

# refinement tolerance (in t) for extrema and branch times
TIME_TOL = 1e-10

UNIFORM = "uniform"
APPENDIX_PIECEWISE = "appendix_piecewise"
DEFAULT_AVERAGING_MODE = APPENDIX_PIECEWISE
AVERAGING_MODES = (UNIFORM, APPENDIX_PIECEWISE)


def fubini_study_density(theta):
    """Square root of the metric determinant, sin(theta)/4. Integrates to 1/2
    over theta in [0, pi]; the full sphere has area pi."""
    return np.sin(theta) / 4.0


@dataclass(frozen=True)
class AngularBox:
    """Bounding box of a trajectory in (theta, phi)."""

    theta_min: float
    theta_max: float
    phi_min: float
    phi_max: float

    @property
    def theta_extent(self):
        return self.theta_max - self.theta_min

    @property
    def phi_extent(self):
        return self.phi_max - self.phi_min


@dataclass(frozen=True)
class VolumeReport:
    v_bar: float
    v_max: float
    theta_min: float
    theta_max: float
    phi_min: float
    phi_max: float
    degenerate_theta: bool
    degenerate_phi: bool
    averaging_mode: str


@dataclass(frozen=True)
class ComplexityReport:
    s: float
    complexity: float
    length_scale: float
    eta_ge: float
    eta_se: float
    kappa2: float


@dataclass(frozen=True)
class AnalysisConfig:
    samples: int = DEFAULT_SAMPLES
    averaging_mode: str = DEFAULT_AVERAGING_MODE

    def __post_init__(self):
        if self.averaging_mode not in AVERAGING_MODES:
            raise ValueError(f"unknown averaging mode {self.averaging_mode!r}")
        # Simpson quadrature needs an even panel count
        if self.samples % 2 == 0:
            raise ValueError(f"sample count must be odd, got {self.samples}")


@dataclass(frozen=True)
class EvolutionReport:
    """Everything `analyze` knows about one evolution."""

    alpha: float
    t_ab: float
    s: float
    eta_ge: float
    eta_se: float
    kappa2: float
    complexity: float
    length_scale: float
    volume: VolumeReport

    @property
    def complexity_report(self):
        return ComplexityReport(s=self.s, complexity=self.complexity,
                                length_scale=self.length_scale,
                                eta_ge=self.eta_ge, eta_se=self.eta_se,
                                kappa2=self.kappa2)

    @property
    def degeneracy_label(self):
        parts = []
        if self.volume.degenerate_theta:
            parts.append("theta")
        if self.volume.degenerate_phi:
            parts.append("phi")
        return "+".join(parts) if parts else "none"


def instantaneous_volume(theta_a, phi_a, theta_t, phi_t):
    """Rectangle volume between the start point and the current point.

    When one angular extent is below the degeneracy threshold, the vanishing
    factor is replaced by the dedicated convention (|other extent|/2); when
    both vanish the volume is 0.
    """
    d_theta = abs(theta_t - theta_a)
    d_phi = abs(phi_t - phi_a)
    theta_deg = d_theta < EPS_DEGENERATE
    phi_deg = d_phi < EPS_DEGENERATE
    if theta_deg and phi_deg:
        return 0.0
    if theta_deg:
        return 0.5 * d_phi
    if phi_deg:
        return 0.5 * d_theta
    return 0.25 * abs((np.cos(theta_a) - np.cos(theta_t)) * (phi_t - phi_a))


def accessed_volume(traj, mode=DEFAULT_AVERAGING_MODE):
    """Time-averaged instantaneous volume of the trajectory."""
    box = bounding_box(traj)
    v_bar, _ = _accessed_volume(traj, mode, _degeneracy_kind(box))
    return v_bar


def segment_averages(traj):
    """Per-branch-segment time averages of V(t) in the piecewise mode.

    Returns a list of (t_start, t_end, average); their sum is the
    appendix_piecewise accessed volume.
    """
    box = bounding_box(traj)
    _, segments = _accessed_volume(traj, APPENDIX_PIECEWISE,
                                   _degeneracy_kind(box))
    return segments


def accessible_volume(traj):
    """Volume of the bounding box swept by the trajectory, with the box.

    Extrema are located by a scan over the sample grid plus golden-section
    refinement of every local bracket to a time tolerance of 1e-10.
    """
    box = bounding_box(traj)
    return _box_volume(box, _degeneracy_kind(box)), box


def complexity(v_bar, v_max):
    """Deficit ratio (V_max - V̄)/V_max in [0, 1)."""
    if v_max <= 0.0 or v_bar <= 0.0:
        raise NonPositiveVolume(
            f"volumes must be positive, got v_bar={v_bar}, v_max={v_max}")
    ratio = v_bar / v_max
    if ratio > 1.0 + 1e-12:
        raise ValueError(
            f"accessed volume {v_bar} exceeds accessible volume {v_max}")
    return max(1.0 - ratio, 0.0)


def complexity_length_scale(s, c):
    """L_C = s/sqrt(1 - C) >= s; rejects C = 1 (division by zero)."""
    if s <= 0.0:
        raise ValueError("path length must be positive")
    if not 0.0 <= c < 1.0:
        raise ValueError(f"complexity must lie in [0, 1), got {c}")
    return s / np.sqrt(1.0 - c)


def analyze(problem, params, config=None):
    """Full pipeline: sample, box, volumes, complexity, and path metrics."""
    config = config or AnalysisConfig()
    traj = sample_trajectory(problem, params, config.samples)
    box = bounding_box(traj)
    kind = _degeneracy_kind(box)
    v_max = _box_volume(box, kind)
    v_bar, _ = _accessed_volume(traj, config.averaging_mode, kind)
    c = complexity(v_bar, v_max)
    s = path_length(problem, params)
    f = suboptimal_field(problem, params)
    volume = VolumeReport(
        v_bar=v_bar, v_max=v_max,
        theta_min=box.theta_min, theta_max=box.theta_max,
        phi_min=box.phi_min, phi_max=box.phi_max,
        degenerate_theta=box.theta_extent < EPS_DEGENERATE,
        degenerate_phi=box.phi_extent < EPS_DEGENERATE,
        averaging_mode=config.averaging_mode)
    return EvolutionReport(
        alpha=params.alpha,
        t_ab=evolution_time(problem, params),
        s=s,
        eta_ge=geodesic_efficiency(problem, params),
        eta_se=speed_efficiency(f, problem.a_hat),
        kappa2=curvature_coefficient(f, problem.a_hat),
        complexity=c,
        length_scale=complexity_length_scale(s, c),
        volume=volume)


def bounding_box(traj):
    """Refined (theta, phi) bounding box of a trajectory."""
    ev = state_evaluator(traj.problem, traj.params)
    theta_lo, theta_hi = _refined_extrema(traj.t, traj.theta,
                                          lambda ts, ks: _theta_at(ev, ts))
    phi_lo, phi_hi = _refined_extrema(
        traj.t, traj.phi, lambda ts, ks: _phi_at(ev, ts, traj.phi[ks]))
    return AngularBox(theta_min=theta_lo, theta_max=theta_hi,
                      phi_min=phi_lo, phi_max=phi_hi)


def branch_times(traj):
    """Interior instants where Re c0 or Re c1 crosses zero, i.e. where the
    period-pi arctangent representation of the azimuth changes branch.

    Refined by bisection to 1e-10 in t. Crossings through (numerical) zeros
    of the whole amplitude, i.e. poles, are not branch flips and are skipped.
    """
    ev = state_evaluator(traj.problem, traj.params)
    t = traj.t
    roots = []
    for comp in range(2):
        re = traj.states[:, comp].real

        def re_at(x, comp=comp):
            return float(np.real(ev(x)[..., comp]))

        crossing = (re[:-1] < 0.0) != (re[1:] < 0.0)
        for k in np.nonzero(crossing)[0]:
            root = bisect_root(re_at, float(t[k]), float(t[k + 1]),
                               xtol=TIME_TOL)
            if abs(complex(ev(root)[..., comp])) > 1e-9:
                roots.append(root)
    roots = [r for r in sorted(roots) if t[0] + 1e-12 < r < t[-1] - 1e-12]
    merged = []
    for r in roots:
        if not merged or r - merged[-1] > 1e-9:
            merged.append(r)
    return merged


# -- internals ---------------------------------------------------------------

# degeneracy kinds decided once per trajectory from the refined box
_RECTANGLE = "rectangle"
_PARALLEL = "parallel"   # theta extent degenerate: V = |d phi| / 2
_MERIDIAN = "meridian"   # phi extent degenerate:   V = |d theta| / 2


def _degeneracy_kind(box):
    theta_deg = box.theta_extent < EPS_DEGENERATE
    phi_deg = box.phi_extent < EPS_DEGENERATE
    if theta_deg and phi_deg:
        raise NonPositiveVolume("trajectory does not move in (theta, phi)")
    if theta_deg:
        return _PARALLEL
    if phi_deg:
        return _MERIDIAN
    return _RECTANGLE


def _box_volume(box, kind):
    if kind == _PARALLEL:
        return 0.5 * box.phi_extent
    if kind == _MERIDIAN:
        return 0.5 * box.theta_extent
    return 0.25 * ((np.cos(box.theta_min) - np.cos(box.theta_max))
                   * box.phi_extent)


def _volume_samples(theta_a, phi_a, theta, phi, kind):
    if kind == _PARALLEL:
        return 0.5 * np.abs(phi - phi_a)
    if kind == _MERIDIAN:
        return 0.5 * np.abs(theta - theta_a)
    return 0.25 * np.abs((np.cos(theta_a) - np.cos(theta)) * (phi - phi_a))


def _accessed_volume(traj, mode, kind):
    """Accessed volume plus the per-segment averages that make it up."""
    if mode not in AVERAGING_MODES:
        raise ValueError(f"unknown averaging mode {mode!r}")
    theta_a = float(traj.theta[0])
    phi_a = float(traj.phi[0])

    if mode == UNIFORM:
        boundaries = [traj.t_a, traj.t_b]
    else:
        boundaries = [traj.t_a] + branch_times(traj) + [traj.t_b]

    ev = state_evaluator(traj.problem, traj.params)
    n = traj.n_samples
    averages = []
    richardson = 0.0
    phi_anchor = phi_a
    for t0, t1 in zip(boundaries[:-1], boundaries[1:]):
        span = t1 - t0
        if span < 1e-12:
            # vanishing segment: its average is just the local value
            theta_m = _theta_at(ev, 0.5 * (t0 + t1))
            phi_m = _phi_at(ev, 0.5 * (t0 + t1), phi_anchor)
            averages.append((t0, t1, float(_volume_samples(
                theta_a, phi_a, theta_m, phi_m, kind))))
            continue
        if mode == UNIFORM:
            theta, phi = traj.theta, traj.phi
            dt = float(traj.t[1] - traj.t[0])
        else:
            ts = np.linspace(t0, t1, n)
            theta, phi = angles_from_states(ev(ts), phi_anchor)
            dt = float(ts[1] - ts[0])
        v = _volume_samples(theta_a, phi_a, theta, phi, kind)
        full = float(simpson_uniform(v, dt)) / span
        half = float(simpson_uniform(v[::2], 2.0 * dt)) / span
        richardson += abs(full - half)
        averages.append((t0, t1, full))
        phi_anchor = float(phi[-1])

    if richardson >= RICHARDSON_TOL:
        raise QuadratureNotConverged(
            f"step-doubling changed the accessed volume by {richardson:.3g} "
            f"(limit {RICHARDSON_TOL:g}); refine the sampling")
    v_bar = float(sum(avg for _, _, avg in averages))
    return v_bar, averages


def _theta_at(ev, ts):
    states = ev(np.asarray(ts, dtype=float))
    return 2.0 * np.arctan2(np.abs(states[..., 1]), np.abs(states[..., 0]))


def _phi_at(ev, ts, ref):
    """Continuous azimuth at arbitrary times, resolved to the 2*pi branch
    nearest a per-point reference value (pole samples return the reference)."""
    states = ev(np.asarray(ts, dtype=float))
    theta = 2.0 * np.arctan2(np.abs(states[..., 1]), np.abs(states[..., 0]))
    raw = np.angle(states[..., 1] * np.conj(states[..., 0]))
    two_pi = 2.0 * np.pi
    shifted = raw + two_pi * np.round((ref - raw) / two_pi)
    return np.where(np.sin(theta) < AZIMUTH_POLE_EPS, ref, shifted)


def _refined_extrema(t, y, feval):
    """Global extrema of a sampled smooth function, refined by golden-section
    search on every interior local bracket.

    ``feval(ts, ks)`` evaluates the function at times ``ts`` using the sample
    indices ``ks`` as per-point references (needed for azimuth continuity).
    """
    candidates = [float(y[0]), float(y[-1])]
    if y.size >= 3:
        inner = y[1:-1]
        left = y[:-2]
        right = y[2:]
        is_max = (inner >= left) & (inner >= right) & ((inner > left) | (inner > right))
        is_min = (inner <= left) & (inner <= right) & ((inner < left) | (inner < right))
        for mask, refine in ((is_max, golden_section_max),
                             (is_min, golden_section_min)):
            ks = np.nonzero(mask)[0] + 1
            if ks.size == 0:
                continue

            def f(ts, ks=ks):
                return feval(ts, ks)

            t_star = refine(f, t[ks - 1], t[ks + 1], xtol=TIME_TOL)
            candidates.extend(np.atleast_1d(f(t_star)).tolist())
    return min(candidates), max(candidates)

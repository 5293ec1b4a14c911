"""Path length, geodesic and speed efficiencies, and the curvature
coefficient of a stationary evolution.

Lengths are measured so that the geodesic joining the source and target
states has length theta_AB (i.e. ds/dt = 2*DeltaE/hbar, with DeltaE the
energy uncertainty). Efficiencies are dimensionless ratios in (0, 1]; the
curvature coefficient 4*(a.h)^2 / (h^2 - (a.h)^2) vanishes exactly for the
rotation-axis (time-optimal) field.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ParallelField
from .hamiltonians import evolution_time
from .numerics import simpson_uniform


@dataclass(frozen=True)
class PathMetrics:
    s: float        # traversed arc length
    s0: float       # geodesic distance
    eta_ge: float   # s0 / s


@dataclass(frozen=True)
class SpeedMetrics:
    delta_e: float        # energy uncertainty at the source state
    spectral_norm: float  # |h| (largest eigenvalue magnitude of h.sigma)
    eta_se: float         # delta_e / spectral_norm


@dataclass(frozen=True)
class CurvatureMetrics:
    h_par_sq: float   # (a.h)^2
    h_perp_sq: float  # h^2 - (a.h)^2
    kappa2: float     # 4 * h_par_sq / h_perp_sq


def geodesic_distance(problem):
    """2*arccos|<A|B>|, which equals the separation angle theta_AB."""
    overlap = abs(np.vdot(problem.source_state, problem.target_state))
    return 2.0 * float(np.arccos(np.clip(overlap, 0.0, 1.0)))


def path_length(problem, params):
    """Closed-form arc length of the family member at mixing angle alpha:

        s(alpha) = 2*sqrt(1 - cos^2(alpha) cos^2(theta_AB/2)) * E*t(alpha)/hbar

    which reduces to theta_AB at alpha = pi/2.
    """
    half = np.cos(problem.theta_ab / 2.0)
    root = np.sqrt(1.0 - (np.cos(params.alpha) * half) ** 2)
    return 2.0 * root * problem.omega * evolution_time(problem, params)


def path_length_numeric(traj, f):
    """Arc length by Simpson quadrature of 2*DeltaE(t)/hbar over the samples.

    DeltaE is evaluated in Bloch form sqrt(h^2 - (r(t).h)^2) with r(t) the
    sampled Bloch vector, avoiding per-sample matrix traces.
    """
    c0 = traj.states[:, 0]
    c1 = traj.states[:, 1]
    r = np.stack([2.0 * (np.conj(c0) * c1).real,
                  2.0 * (np.conj(c0) * c1).imag,
                  np.abs(c0) ** 2 - np.abs(c1) ** 2], axis=1)
    h_sq = float(np.dot(f.h, f.h))
    delta_e = np.sqrt(np.clip(h_sq - (r @ f.h) ** 2, 0.0, None))
    dt = traj.t[1] - traj.t[0]
    return float(simpson_uniform(2.0 * delta_e / traj.problem.hbar, dt))


def geodesic_efficiency(problem, params):
    """s0/s; equals 1 exactly when the path is the geodesic (alpha = pi/2)."""
    return geodesic_distance(problem) / path_length(problem, params)


def speed_efficiency(f, a_hat):
    """sqrt(h_perp^2) / |h|: the fraction of the drive that actually moves the
    state instead of spinning it about its own axis."""
    m = f.magnitude
    if m == 0.0:
        raise ValueError("zero field has no speed efficiency")
    cos_angle = float(np.dot(f.direction, a_hat))
    return float(np.sqrt(max(1.0 - cos_angle ** 2, 0.0)))


def curvature_coefficient(f, a_hat):
    """4*(a.h)^2 / (h^2 - (a.h)^2), the squared bending coefficient of the
    path generated by field h from Bloch vector a."""
    h_sq = float(np.dot(f.h, f.h))
    par_sq = f.parallel_squared(a_hat)
    perp_sq = h_sq - par_sq
    if perp_sq < 1e-12 * h_sq:
        raise ParallelField("field is parallel to the Bloch vector")
    return 4.0 * par_sq / perp_sq


def path_metrics(problem, params):
    s = path_length(problem, params)
    s0 = geodesic_distance(problem)
    return PathMetrics(s=s, s0=s0, eta_ge=s0 / s)


def speed_metrics(f, a_hat):
    eta = speed_efficiency(f, a_hat)
    return SpeedMetrics(delta_e=eta * f.magnitude, spectral_norm=f.magnitude,
                        eta_se=eta)


def curvature_metrics(f, a_hat):
    par_sq = f.parallel_squared(a_hat)
    perp_sq = f.perpendicular_squared(a_hat)
    return CurvatureMetrics(h_par_sq=par_sq, h_perp_sq=perp_sq,
                            kappa2=curvature_coefficient(f, a_hat))

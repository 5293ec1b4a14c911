"""Stationary-field constructions for driving a qubit from a source to a
target Bloch vector, and the closed-form propagator they generate.

Two field families are provided for a problem with source a, target b and
separation angle theta_AB = arccos(a.b):

* the rotation-axis field E*(a x b)/|a x b|, which generates the time-optimal
  (geodesic) transfer, and
* a one-parameter family E*[cos(alpha)*(a+b)/|a+b| + sin(alpha)*(a x b)/|a x b|]
  with 0 <= alpha <= pi, which reaches the target along a non-geodesic path
  and reduces to the optimal field at alpha = pi/2.

Both have magnitude E exactly (the two basis directions are orthonormal), so
the propagator for field h over time t is
cos(|h| t / hbar) * 1 - i sin(|h| t / hbar) * (h_hat . sigma).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateGeometry
from .qubit import IDENTITY, pauli_dot, state_from_bloch

# |a x b| = sin(theta_AB) below this makes the axis construction blow up
DEGENERACY_EPS = 1e-12


@dataclass(frozen=True)
class EvolutionProblem:
    """Source/target Bloch vectors with the energy scale of the drive.

    ``theta_ab`` is always recomputed from the vectors; a caller-supplied
    value is only cross-checked (tolerance 1e-9) to reject inconsistent
    inputs.
    """

    a_hat: np.ndarray
    b_hat: np.ndarray
    energy: float = 1.0
    hbar: float = 1.0
    theta_ab: float = field(default=None)

    def __post_init__(self):
        a = _unit(np.asarray(self.a_hat, dtype=float), "a_hat")
        b = _unit(np.asarray(self.b_hat, dtype=float), "b_hat")
        if self.energy <= 0.0:
            raise ValueError("energy must be positive")
        if self.hbar <= 0.0:
            raise ValueError("hbar must be positive")
        theta = float(np.arctan2(np.linalg.norm(np.cross(a, b)), np.dot(a, b)))
        if self.theta_ab is not None and abs(theta - self.theta_ab) > 1e-9:
            raise ValueError(
                f"supplied theta_ab={self.theta_ab} inconsistent with "
                f"arccos(a.b)={theta}")
        object.__setattr__(self, "a_hat", a)
        object.__setattr__(self, "b_hat", b)
        object.__setattr__(self, "theta_ab", theta)

    @property
    def omega(self):
        return self.energy / self.hbar

    @property
    def source_state(self):
        return state_from_bloch(self.a_hat)

    @property
    def target_state(self):
        return state_from_bloch(self.b_hat)

    def require_nondegenerate(self):
        if np.sin(self.theta_ab) < DEGENERACY_EPS:
            raise DegenerateGeometry(
                f"source and target are (anti)parallel: theta_ab={self.theta_ab}")


@dataclass(frozen=True)
class SubOptimalParams:
    """Mixing angle alpha of the field family, 0 <= alpha <= pi."""

    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= np.pi:
            raise ValueError(f"alpha must lie in [0, pi], got {self.alpha}")


@dataclass(frozen=True)
class FieldVector:
    """A stationary field h (energy units) defining H = h . sigma."""

    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float)
        if h.shape != (3,) or not np.all(np.isfinite(h)):
            raise ValueError("field must be a finite 3-vector")
        object.__setattr__(self, "h", h)

    @property
    def magnitude(self):
        return float(np.linalg.norm(self.h))

    @property
    def direction(self):
        m = self.magnitude
        if m == 0.0:
            raise ValueError("zero field has no direction")
        return self.h / m

    def parallel_squared(self, a_hat):
        """(a.h)^2, the squared component along a Bloch vector."""
        return float(np.dot(self.h, a_hat)) ** 2

    def perpendicular_squared(self, a_hat):
        return float(np.dot(self.h, self.h)) - self.parallel_squared(a_hat)


def optimal_field(problem):
    """Field along the normalized a x b axis, magnitude E, orthogonal to both
    source and target vectors."""
    problem.require_nondegenerate()
    cross = np.cross(problem.a_hat, problem.b_hat)
    return FieldVector(problem.energy * cross / np.linalg.norm(cross))


def suboptimal_field(problem, params):
    """Member of the field family at mixing angle alpha; magnitude E."""
    problem.require_nondegenerate()
    cross = np.cross(problem.a_hat, problem.b_hat)
    plus = problem.a_hat + problem.b_hat
    plus_norm = np.linalg.norm(plus)
    if plus_norm < DEGENERACY_EPS:
        raise DegenerateGeometry("antipodal vectors: bisector undefined")
    h = problem.energy * (np.cos(params.alpha) * plus / plus_norm
                          + np.sin(params.alpha) * cross / np.linalg.norm(cross))
    return FieldVector(h)


def propagator(f, t, hbar=1.0):
    """Unitary exp(-i (h.sigma) t / hbar) in closed form.

    Unitary with determinant 1 by construction.
    """
    if t < 0.0:
        raise ValueError("propagation time must be nonnegative")
    m = f.magnitude
    if m == 0.0:
        raise ValueError("zero field: propagator is trivially the identity")
    angle = m * t / hbar
    return np.cos(angle) * IDENTITY - 1j * np.sin(angle) * pauli_dot(f.direction)


def evolution_time(problem, params):
    """Arrival time of the family member at the target state:

        t(alpha) = (hbar/E) * arccos[ sin(alpha) cos(theta_AB/2)
                                      / sqrt(1 - cos^2(alpha) cos^2(theta_AB/2)) ]

    Equals hbar*theta_AB/(2E) at alpha = pi/2 and is symmetric under
    alpha -> pi - alpha.
    """
    problem.require_nondegenerate()
    half = np.cos(problem.theta_ab / 2.0)
    den = np.sqrt(1.0 - (np.cos(params.alpha) * half) ** 2)
    arg = np.clip(np.sin(params.alpha) * half / den, -1.0, 1.0)
    return (problem.hbar / problem.energy) * float(np.arccos(arg))


def amplitudes(problem, params, t):
    """State amplitudes at time t, from the closed-form propagator applied to
    the source state."""
    u = propagator(suboptimal_field(problem, params), t, problem.hbar)
    return u @ problem.source_state


def equatorial_problem(theta_ab=np.pi / 2.0, energy=1.0, hbar=1.0):
    """Problem with source x-hat and target in the xy-plane at angle theta_ab.

    theta_ab = pi/2 gives the x-hat -> y-hat pair used throughout the
    reference tables.
    """
    if not 0.0 < theta_ab < np.pi:
        raise ValueError("theta_ab must lie strictly inside (0, pi)")
    b = np.array([np.cos(theta_ab), np.sin(theta_ab), 0.0])
    return EvolutionProblem(a_hat=np.array([1.0, 0.0, 0.0]), b_hat=b,
                            energy=energy, hbar=hbar)


def _unit(v, name):
    if v.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"{name} must be a unit vector, got norm {norm}")
    return v / norm

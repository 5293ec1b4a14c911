"""Pauli algebra and conversions between two-level state vectors, density
matrices, and Bloch vectors.

States are length-2 complex ndarrays (amplitudes of |0> and |1>), operators
are 2x2 complex ndarrays, Bloch vectors are length-3 float ndarrays.
"""

import numpy as np

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

# sin(theta) below this is treated as a pole: the azimuth is conventionally 0
POLE_EPS = 1e-12


def pauli_dot(v):
    """v_x*sigma_x + v_y*sigma_y + v_z*sigma_z for a real 3-vector v.

    The result is Hermitian and traceless with eigenvalues +/-|v|.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise ValueError("pauli_dot expects a finite 3-vector")
    return v[0] * PAULI_X + v[1] * PAULI_Y + v[2] * PAULI_Z


def state_from_bloch(v):
    """State vector (cos(theta/2), exp(i*phi) sin(theta/2)) for a unit Bloch
    vector, with the global phase fixed so the |0> amplitude is real >= 0."""
    v = _require_unit(v)
    theta = np.arctan2(np.hypot(v[0], v[1]), v[2])
    phi = 0.0 if np.hypot(v[0], v[1]) < POLE_EPS else np.arctan2(v[1], v[0])
    return np.array([np.cos(theta / 2.0),
                     np.exp(1j * phi) * np.sin(theta / 2.0)], dtype=complex)


def bloch_from_state(state):
    """Unit Bloch vector of a normalized state.

    theta = 2*arctan(|c1|/|c0|); phi is the atan2-based phase difference
    arg(c1) - arg(c0), set to 0 at the poles where it is undefined.
    """
    c0, c1 = complex(state[0]), complex(state[1])
    theta = 2.0 * np.arctan2(abs(c1), abs(c0))
    if np.sin(theta) < POLE_EPS:
        phi = 0.0
    else:
        phi = np.angle(c1 * np.conj(c0))
    return np.array([np.sin(theta) * np.cos(phi),
                     np.sin(theta) * np.sin(phi),
                     np.cos(theta)])


def density_from_bloch(v):
    """Pure-state density matrix (1 + v.sigma)/2; rejects non-unit input."""
    v = _require_unit(v)
    return 0.5 * (IDENTITY + pauli_dot(v))


def _require_unit(v, tol=1e-9):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError("expected a 3-vector")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"expected a unit vector, got |v| = {norm}")
    return v / norm

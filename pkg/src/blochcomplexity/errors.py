"""Exception types raised across the package."""


class BlochComplexityError(Exception):
    """Base class for all package-specific errors."""


class DegenerateGeometry(BlochComplexityError):
    """Source and target Bloch vectors are parallel or antiparallel, so the
    rotation-axis construction (cross product / bisector) is undefined."""


class UnwrapAmbiguity(BlochComplexityError):
    """An azimuth jump between adjacent samples exceeded pi/2 even after
    removing 2*pi multiples; the trajectory is undersampled."""


class NonPositiveVolume(BlochComplexityError):
    """Accessed or accessible volume is not strictly positive."""


class ParallelField(BlochComplexityError):
    """Field is (numerically) parallel to the Bloch vector; the curvature
    coefficient denominator vanishes."""


class NormDrift(BlochComplexityError):
    """Reference integrator lost normalization beyond the allowed drift."""


class QuadratureNotConverged(BlochComplexityError):
    """Step-doubling changed the accessed volume by more than the allowed
    threshold; the run is rejected rather than silently accepted."""


class SymmetryViolation(BlochComplexityError):
    """Supplementary-angle reports disagree beyond tolerance."""

    def __init__(self, message, records=None):
        super().__init__(message)
        self.records = records or []


class ScalingViolation(BlochComplexityError):
    """Frequency-scaling invariance failed beyond tolerance."""

    def __init__(self, message, records=None):
        super().__init__(message)
        self.records = records or []

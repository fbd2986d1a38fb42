"""Exception types shared across the pipeline.

Every error carries a stable ``code`` (the class name) so the CLI can emit
single-line machine-parsable diagnostics.
"""


class HullSplatError(Exception):
    """Base class for all pipeline errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class PointBehindCamera(HullSplatError):
    """Projection requested for a point with non-positive camera-frame depth."""


class DegenerateGeometry(HullSplatError):
    """Triangulation system is rank-deficient (e.g. coincident cameras)."""


class MissingFile(HullSplatError):
    """A required frame, mask, or artifact file does not exist."""


class DimensionMismatch(HullSplatError):
    """Loaded image dimensions disagree with the owning camera."""


class EmptyVolume(HullSplatError):
    """Voxel grid has zero total occupancy mass."""


class NotSPD(HullSplatError):
    """Matrix expected to be symmetric positive definite is not."""


class VerticalAxis(HullSplatError):
    """Principal axis is too close to vertical to define an azimuth."""


class EmptyMask(HullSplatError):
    """Mask has no foreground pixels where at least one is required."""


class BothEmpty(HullSplatError):
    """IoU undefined: predicted coverage and mask are both identically zero."""


class EmptyUsage(HullSplatError):
    """Volume truncation requested but no voxel was ever occupied."""


class BadDimensions(HullSplatError):
    """Feature extraction input is not a 224x224x3 image."""


class SingularConcomitant(HullSplatError):
    """Concomitant covariance is singular (constant azimuth)."""


class NoFeasibleMu(HullSplatError):
    """No scanned regularization strength met the leakage criterion."""


class InsufficientCandidates(HullSplatError):
    """Fewer neighbor candidates than requested after time exclusion."""


class ConfigPathMissing(HullSplatError):
    """A path referenced by the pipeline config does not exist."""


class ConfigInvalid(HullSplatError):
    """Pipeline config value out of range or inconsistent."""

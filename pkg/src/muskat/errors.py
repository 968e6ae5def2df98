"""Exception types raised across the package."""


class MuskatError(Exception):
    """Base class for all package-specific errors."""


class PoleError(MuskatError):
    """Evaluation requested at a pole of the Schwarz function."""


class BranchCutError(MuskatError):
    """Evaluation requested on a branch-cut set."""


class AdmissibilityError(MuskatError):
    """Parameter rates violate the family's admissibility constraint."""


class NotOnBoundaryError(MuskatError):
    """Point is not on the interface to within tolerance."""


class InvalidCount(MuskatError):
    """Sample count too small."""


class DomainError(MuskatError):
    """Argument outside the valid domain of a special function."""


class ModulusError(DomainError):
    """Elliptic modulus outside [0, 1)."""


class ReductionError(MuskatError):
    """Amplitude cannot be reduced to the principal strip."""


class BranchError(MuskatError):
    """Amplitude requires a branch choice outside the principal strip."""


class StationaryPointError(MuskatError):
    """Moving-singularity formula applied to a stationary point."""


class DegenerateError(MuskatError):
    """Degenerate input (all rates vanish) for a cut-direction formula."""


class EndpointError(MuskatError):
    """Density requested at or beyond a support endpoint."""


class QuadratureError(MuskatError):
    """Support quadrature failed to converge."""


class RegionError(MuskatError):
    """Requested region intersects supports or the interface."""


class WrongSideError(MuskatError):
    """Field evaluation point lies in the other fluid's domain."""


class OnSupportError(MuskatError):
    """Field evaluation at a singular support point."""


class FamilyError(MuskatError):
    """Operation only defined for a specific curve family."""


class DegenerateShapeError(MuskatError):
    """Shape too close to a terminal manifold to evolve."""


class StepTooLarge(MuskatError):
    """Time step could not be bisected onto the terminal event."""


class ConfigError(MuskatError):
    """Invalid run configuration."""

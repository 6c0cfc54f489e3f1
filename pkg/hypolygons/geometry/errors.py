class GeometryError(ValueError):
    """ Base class for every failure of the hyperbolic model.

    The command line maps these to the "infeasible or invalid model" exit status.
    """
    pass
class NormalizationError(GeometryError):
    pass
class OutOfChartError(GeometryError):
    pass
class ClosureError(GeometryError):
    pass
class RankDeficiencyError(GeometryError):
    pass
class InfeasibleSpecError(GeometryError):
    pass
class InfeasibleBlockError(GeometryError):
    pass
class BracketError(GeometryError):
    pass
class ProjectionError(GeometryError):

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
class BoundaryEscapeError(GeometryError):
    pass
class SamplerExhaustedError(GeometryError):
    pass
class ReconstructionInfeasibleError(GeometryError):

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else {}
class SurfaceTypeError(GeometryError):
    pass

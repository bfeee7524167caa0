"""Exception hierarchy shared by every module of the package."""


class OrthologyLabError(ValueError):
    """Base class for all domain errors raised by orthology_lab."""


class DegenerateTriangle(OrthologyLabError):
    pass


class CoincidentPoints(OrthologyLabError):
    pass


class ZeroDirection(OrthologyLabError):
    pass


class CoincidentLines(OrthologyLabError):
    pass


class NotOrthologic(OrthologyLabError):
    pass


class PencilDegenerate(OrthologyLabError):
    """Two of the lines that should meet in a single point coincide."""


class NotBiorthologic(OrthologyLabError):
    pass


class GenerationFailed(OrthologyLabError):
    pass


class PointNotOnCircle(OrthologyLabError):
    pass


class TangentLine(OrthologyLabError):
    pass


class OutsideOrOnCircle(OrthologyLabError):
    pass


class VertexPoint(OrthologyLabError):
    pass


class DegenerateCevian(OrthologyLabError):
    """A vertex coincides with its image, so the connecting line is undefined."""


class NotHomological(OrthologyLabError):
    pass


class PointOnLine(OrthologyLabError):
    pass


class ConfigInvalid(OrthologyLabError):
    pass


class ParseError(OrthologyLabError):
    pass


class InvariantViolation(AssertionError):
    """An identity that must hold exactly was observed to fail."""

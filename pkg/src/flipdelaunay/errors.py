"""Exception hierarchy shared by every module of the package."""


class HypermapError(Exception):
    """Base class for all errors raised by this package."""


# -- map construction ---------------------------------------------------------

class ConstructorError(HypermapError):
    """A free-map constructor violated its precondition.

    ``index`` is the position of the offending constructor in the free map
    (``None`` when the constructor was applied directly to a map).
    """

    def __init__(self, message, index=None):
        if index is not None:
            message = f"constructor #{index}: {message}"
        super().__init__(message)
        self.index = index


class DuplicateDart(ConstructorError):
    def __init__(self, dart, index=None):
        super().__init__(f"dart {dart} is already present", index)
        self.dart = dart


class NilDart(ConstructorError):
    def __init__(self, index=None):
        super().__init__("dart 0 (nil) cannot be inserted or linked", index)


class UnknownDart(ConstructorError):
    def __init__(self, dart, index=None):
        super().__init__(f"dart {dart} is not in the map", index)
        self.dart = dart


class SourceHasSuccessor(ConstructorError):
    def __init__(self, dim, dart, index=None):
        super().__init__(f"dart {dart} already has a {int(dim)}-successor", index)
        self.dim, self.dart = dim, dart


class TargetHasPredecessor(ConstructorError):
    def __init__(self, dim, dart, index=None):
        super().__init__(f"dart {dart} already has a {int(dim)}-predecessor", index)
        self.dim, self.dart = dim, dart


class WouldCloseOrbit(ConstructorError):
    def __init__(self, dim, source, target, index=None):
        super().__init__(
            f"link {source}->{target} would close an open {int(dim)}-path", index
        )
        self.dim, self.source, self.target = dim, source, target


class MalformedFreeMap(HypermapError):
    """The constructor sequence is not Void followed by I/L constructors."""


# -- surgery ------------------------------------------------------------------

class SurgeryError(HypermapError):
    pass


class NoSuccessor(SurgeryError):
    def __init__(self, dim, dart):
        super().__init__(f"dart {dart} has no stored {int(dim)}-successor")
        self.dim, self.dart = dim, dart


class SameDart(SurgeryError):
    def __init__(self, dart):
        super().__init__(f"split needs two different darts, got {dart} twice")
        self.dart = dart


class NotSameOrbit(SurgeryError):
    def __init__(self, dim, x, y):
        super().__init__(f"darts {x} and {y} are not in the same {int(dim)}-orbit")


class SameOrbit(SurgeryError):
    def __init__(self, dim, x, y):
        super().__init__(f"darts {x} and {y} are already in the same {int(dim)}-orbit")


class NotTwoDartEdge(SurgeryError):
    def __init__(self, dart, size):
        super().__init__(f"edge of dart {dart} has {size} darts, expected 2")
        self.dart, self.size = dart, size


class PrecondViolated(SurgeryError):
    def __init__(self, dart, report):
        super().__init__(f"cannot flip dart {dart}: {report.failure_reason.value}")
        self.dart, self.report = dart, report


# -- engine / builder -----------------------------------------------------------

class NotATriangulation(HypermapError):
    """A map failed the triangulation or well-embedding certificate."""

    def __init__(self, reports):
        lines = [str(v) for r in reports for v in r.violations]
        super().__init__("; ".join(lines) or "certificate check failed")
        self.reports = reports


class InternalInvariantBroken(HypermapError):
    pass


class FlipBudgetExceeded(HypermapError):
    def __init__(self, max_flips, trace):
        super().__init__(f"flip budget of {max_flips} exceeded")
        self.max_flips, self.trace = max_flips, trace


class DegenerateInput(HypermapError):
    def __init__(self, message, points=()):
        super().__init__(message)
        self.points = tuple(points)


class NotInside(HypermapError):
    pass


class OnEdge(HypermapError):
    pass

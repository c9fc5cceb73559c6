class HausdorffError(Exception):
    """Base class for all errors raised by this package."""


class MetricViolation(HausdorffError, ValueError):
    """A distance matrix fails one of the metric axioms.

    ``kind`` names the axiom (``shape``, ``finite``, ``negative``,
    ``diagonal``, ``symmetry``, ``distinctness``, ``triangle``, ``labels``)
    and ``labels`` the offending points.
    """

    def __init__(self, kind: str, labels=(), detail: str = ""):
        self.kind = kind
        self.labels = tuple(labels)
        msg = f"{kind} violation"
        if self.labels:
            msg += " at (" + ", ".join(map(str, self.labels)) + ")"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DuplicatePoint(MetricViolation):
    def __init__(self, labels=(), detail: str = ""):
        super().__init__("distinctness", labels, detail)


class DimensionMismatch(HausdorffError, ValueError):
    pass


class TooLarge(HausdorffError):
    """Input exceeds the cap of an exact enumeration or solver."""


class OutOfRange(HausdorffError, ValueError):
    pass


class PolicyMismatch(HausdorffError, ValueError):
    """A gauge or convention is used outside its domain."""


class DegenerateInput(HausdorffError, ValueError):
    pass

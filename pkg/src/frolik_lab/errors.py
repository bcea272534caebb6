"""Exception hierarchy shared by every module."""


class FrolikLabError(Exception):
    """Base class for all errors raised by this package."""


class TopologyError(FrolikLabError, ValueError):
    """A candidate family of open sets is not a topology."""


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, first, second):
        self.witness = (first, second)
        super().__init__(f"union of {sorted(first)} and {sorted(second)} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, first, second):
        self.witness = (first, second)
        super().__init__(
            f"intersection of {sorted(first)} and {sorted(second)} is not open"
        )


class BadArity(FrolikLabError, ValueError):
    pass


class PointOutOfRange(FrolikLabError, IndexError):
    pass


class IndexMismatch(FrolikLabError, ValueError):
    """Objects living over different index sets were combined."""


class InvalidIndexSize(FrolikLabError, ValueError):
    """Index sets must be nonempty."""


class SizeCapExceeded(FrolikLabError):
    """A combinatorial search would exceed the configured cap."""

    def __init__(self, what, size, cap):
        self.what, self.size, self.cap = what, size, cap
        super().__init__(f"{what}: {size} exceeds cap {cap}")


class EmptyClass(FrolikLabError, ValueError):
    pass


class ParseError(FrolikLabError, ValueError):
    """Malformed JSON input; ``location`` names the offending field."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)

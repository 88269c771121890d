class LatticeError(Exception):
    """Base class for every error raised by sslattice."""


class CycleDetected(LatticeError):
    def __init__(self, cycle_member):
        self.element = cycle_member
        super().__init__(f"order relation has a cycle through element {cycle_member}")


class NotALattice(LatticeError):
    """Some pair lacks a unique meet (``kind='meet'``) or join (``kind='join'``)."""

    def __init__(self, x, y, kind):
        self.x, self.y, self.kind = x, y, kind
        super().__init__(f"elements {x} and {y} have no unique {kind}")


class NoBoundedStructure(NotALattice):
    def __init__(self, x, y, kind):
        super().__init__(x, y, kind)
        self.args = (f"no unique bottom or top (first bad pair: {x}, {y} lack a {kind})",)


class NotGraded(LatticeError):
    """Two maximal chains of different lengths."""

    def __init__(self, first, second):
        self.chains = (tuple(first), tuple(second))
        super().__init__(
            f"lattice is not graded: chain {list(first)} has length {len(first) - 1}, "
            f"chain {list(second)} has length {len(second) - 1}"
        )


class NotClosed(LatticeError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"subset is not a sublattice: meet or join of {x}, {y} escapes it")


class InvalidChain(LatticeError):
    pass


class NotMaximal(InvalidChain):
    pass


class NotACover(LatticeError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"{x} is not covered by {y}")


class PreconditionFailed(LatticeError):
    pass


class SizeGuard(LatticeError):
    pass


class CoverFormatError(LatticeError):
    """Malformed cover-list text; ``line`` is 1-based."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")

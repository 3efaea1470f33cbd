"""Exception hierarchy shared by every module of the package."""


class NbeError(Exception):
    """Base class for all errors raised by this package."""


class TypeMismatch(NbeError, TypeError):
    """A term, index or morphism was built with incompatible types."""


class CtxtMismatch(NbeError, ValueError):
    """Two contexts that must agree do not."""


class BadNode(NbeError):
    """A derivation node violates its rule.

    ``path`` locates the node from the root as a tuple of child labels,
    e.g. ``("Trans.right", "App.fn")``.
    """

    def __init__(self, path, reason):
        self.path = tuple(path)
        self.reason = reason
        where = "/".join(self.path) or "<root>"
        super().__init__(f"bad derivation node at {where}: {reason}")


class InvalidCert(NbeError):
    """The glued engine produced a certificate that does not check."""


class BudgetExceeded(NbeError):
    """An enumeration grew beyond its configured limit."""


class FuelExhausted(NbeError):
    """The bounded conversion search ran out of fuel without a verdict."""


class ParseError(NbeError):
    def __init__(self, message, line=1, col=1):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class UnboundVariable(NbeError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound variable {name!r}")

"""Exception hierarchy. Every error that points at a concrete failure carries
the offending elements in ``witness``."""


class XmodError(Exception):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


# group-core
class GroupAxiomError(XmodError):
    pass


class NotAssociative(GroupAxiomError):
    pass


class NoIdentity(GroupAxiomError):
    pass


class NoInverse(GroupAxiomError):
    pass


class NotABijection(XmodError):
    pass


class ClosureTooLarge(XmodError):
    pass


class NotAHomomorphism(XmodError):
    pass


class NotNormal(XmodError):
    pass


class NotAnAction(XmodError):
    pass


# crossed-module
class NotAbelian(XmodError):
    pass


class HypothesisFailed(XmodError):
    def __init__(self, which, witness=None, message=""):
        super().__init__(message or f"hypothesis {which!r} fails", witness)
        self.which = which


class SearchSpaceTooLarge(XmodError):
    pass


# simplicial-core
class ComponentNotNormal(XmodError):
    pass


class RestrictionEscapesKernel(XmodError):
    pass


class TruncationTooShallow(XmodError):
    pass


# realization
class NotAutomorphism(XmodError):
    pass


class ClosedFormMismatch(XmodError):
    pass


class HomCheckFailed(XmodError):
    pass


class RoundTripFailed(XmodError):
    pass


# cli
class ParseError(XmodError):
    def __init__(self, message, line=None, column=None, path=None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.path = path

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}, column {self.column}")
        if self.path:
            where.append(f"at {self.path}")
        base = super().__str__()
        return f"{base} ({'; '.join(where)})" if where else base


class UnknownEntry(XmodError):
    pass

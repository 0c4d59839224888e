"""Exception hierarchy. Every error names the invariant it reports."""

from __future__ import annotations


class ActorkitError(ValueError):
    """Base class; ``invariant`` is the machine-readable name used by the CLI."""

    invariant = "Invalid"

    def __init__(self, message: str = ""):
        super().__init__(message or self.invariant)


class NotAssociative(ActorkitError):
    invariant = "NotAssociative"


class NoIdentity(ActorkitError):
    invariant = "NoIdentity"


class NoInverse(ActorkitError):
    invariant = "NoInverse"


class IdentityNotZero(ActorkitError):
    invariant = "IdentityNotZero"


class MalformedTable(ActorkitError):
    invariant = "MalformedTable"


class NotHomomorphism(ActorkitError):
    invariant = "NotHomomorphism"


class NotSubgroup(ActorkitError):
    invariant = "NotSubgroup"


class NotNormal(ActorkitError):
    invariant = "NotNormal"


class NotAction(ActorkitError):
    invariant = "NotAction"


class SectionNotSplit(ActorkitError):
    invariant = "SectionNotSplit"


class KernelMismatch(ActorkitError):
    invariant = "KernelMismatch"


class RelationViolated(ActorkitError):
    invariant = "RelationViolated"


class IncompatibleAction(ActorkitError):
    invariant = "IncompatibleAction"


class NotFaithful(ActorkitError):
    invariant = "NotFaithful"


class KernelNotGroupoid(ActorkitError):
    invariant = "KernelNotGroupoid"


class NotGroupoid(ActorkitError):
    invariant = "NotGroupoid"


class NotCrossedModule(ActorkitError):
    invariant = "NotCrossedModule"


class NotNormalInTotal(ActorkitError):
    invariant = "NotNormalInTotal"


class ParseError(ActorkitError):
    invariant = "ParseError"

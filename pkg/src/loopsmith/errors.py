"""Exception hierarchy shared by every loopsmith module."""


class LoopsmithError(Exception):
    """Base class for all library errors."""


class ValidationError(LoopsmithError):
    """A Cayley table failed validation. ``witness`` locates the first violation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLatinSquare(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class NoTwoSidedInverses(ValidationError):
    pass


class BoundExceeded(LoopsmithError):
    pass


class OrderBoundExceeded(BoundExceeded):
    pass


class ClosureBoundExceeded(BoundExceeded):
    pass


class UnknownPreset(LoopsmithError):
    pass


class AbelianInput(LoopsmithError):
    pass


class NotGeneralizedDihedral(LoopsmithError):
    pass


class NotHalfAutomorphism(LoopsmithError):
    pass


class MappingNotInH(LoopsmithError):
    pass

"""Exception hierarchy shared by all latkit modules."""


class LatkitError(Exception):
    """Base class for all latkit errors."""


class ParseError(LatkitError):
    """A text-format file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ValidationError(LatkitError):
    """An object failed a structural invariant; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CycleDetected(ValidationError):
    pass


class NotTransitive(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class SizeLimit(LatkitError):
    pass


class FactorTooSmall(ValidationError):
    pass


class ShapeMismatch(LatkitError):
    pass


class NotJoinPreserving(ValidationError):
    pass


class NotMeetPreserving(ValidationError):
    pass


class EmptyFamily(LatkitError):
    pass


class NotInClass(ValidationError):
    pass


class OrthoAxiomFailed(ValidationError):
    pass


class NotAtomistic(ValidationError):
    pass


class NotSeparating(ValidationError):
    pass


class NotCOLattMorphism(ValidationError):
    pass


class NotWeakMeet(ValidationError):
    pass


class NotClosure(ValidationError):
    pass


class NotAdjoint(ValidationError):
    pass


class NotContinuous(ValidationError):
    pass


class NotSimple(ValidationError):
    pass


class NotAtomicMap(ValidationError):
    pass


class NotBoolean(ValidationError):
    pass


class NotStronglyIsotone(ValidationError):
    pass


class IncoherentInput(ValidationError):
    pass


class NotFullyIsotone(ValidationError):
    pass


class NotMeetStable(ValidationError):
    pass


class NotBalancedAtZero(ValidationError):
    pass

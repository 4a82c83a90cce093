"""Typed domain errors.

Every error raised by the library for a *domain* reason (violated axiom,
failed precondition, exceeded cap) derives from DomainError, so callers --
in particular the CLI -- can distinguish them from programming errors.
Each error carries a short machine-readable name and, where it makes
sense, a witness of the violation.
"""


class DomainError(Exception):
    """Base class for all typed domain errors."""

    @property
    def name(self):
        return type(self).__name__

    def payload(self):
        """A JSON-friendly description of the error."""
        return {"error": self.name, "detail": str(self)}


class CapExceeded(DomainError):
    pass


class UniverseMismatch(DomainError):
    pass


class UniverseCardinalityMismatch(DomainError):
    pass


class BaseCriterionViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "base criterion %s violated (witness %r)" % (axiom, witness))


class SubbaseCriterionViolation(DomainError):
    def __init__(self, criterion, message=""):
        self.criterion = criterion
        super().__init__(message or "subbase criterion violated: %s" % criterion)


class ClosedAxiomViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "closed-system axiom %s violated (witness %r)" % (axiom, witness))


class FilterBaseViolation(DomainError):
    def __init__(self, condition, witness=None, message=""):
        self.condition = condition
        self.witness = witness
        super().__init__(message or "filter base condition violated: %s (witness %r)" % (condition, witness))


class EmptyMeet(DomainError):
    def __init__(self, selection):
        self.selection = selection
        super().__init__("cross intersection is empty for selection %r" % (selection,))


class NotSurjective(DomainError):
    pass


class NeighborhoodAxiomViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "neighborhood axiom %s violated (witness %r)" % (axiom, witness))


class SetMapAxiomViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "set-neighborhood-map axiom %s violated (witness %r)" % (axiom, witness))


class NeighborhoodBaseViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "neighborhood base axiom %s violated (witness %r)" % (axiom, witness))


class NotABase(DomainError):
    pass


class KuratowskiViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "closure-operator axiom %s violated (witness %r)" % (axiom, witness))


class InteriorAxiomViolation(DomainError):
    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or "interior-operator axiom %s violated (witness %r)" % (axiom, witness))


class NotDirected(DomainError):
    pass


class ClusterPreconditionFailed(DomainError):
    pass


class NotEquivalence(DomainError):
    pass


class NoFullField(DomainError):
    pass


class MissingFullDomain(DomainError):
    pass


class MissingFullRange(DomainError):
    pass


class InvalidMetric(DomainError):
    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__("invalid pseudo-metric: %s (witness %r)" % (reason, witness))


class EmptyArgument(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class NonDyadicClosedForm(DomainError):
    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__("closed form %d/%d is not a dyadic rational" % (numerator, denominator))


class BracketViolation(DomainError):
    def __init__(self, step):
        self.step = step
        super().__init__("bracket invariant failed at bisection step %d" % step)


class LengthMismatch(DomainError):
    pass


class NonDyadicLiteral(DomainError):
    pass

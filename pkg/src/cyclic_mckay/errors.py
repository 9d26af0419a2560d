"""Exception hierarchy.  Everything raised on bad input derives from McKayError."""


class McKayError(ValueError):
    pass


class TrivialGroup(McKayError):
    pass


class BadExponent(McKayError):
    pass


class NotSmall(McKayError):
    pass


class NegativeExponent(McKayError):
    pass


class TrivialIndex(McKayError):
    pass


class NotSL2(McKayError):
    pass


class InternalInconsistency(McKayError):
    """A computed structure violates a theorem; always indicates a bug."""


class NonIntegralRelation(InternalInconsistency):
    pass


class NonSpecialCotangent(InternalInconsistency):
    pass


class TooManyGenerators(InternalInconsistency):
    pass


class NotAChain(InternalInconsistency):
    pass

"""Exceptions shared across the toolkit."""


class NilgeoError(Exception):
    pass


class InvalidRank(NilgeoError):
    pass


class NotARoot(NilgeoError):
    pass


class OrbitBudgetExceeded(NilgeoError):
    pass


class PreconditionViolated(NilgeoError):
    pass


class DimensionCapExceeded(NilgeoError):
    pass


class KernelNotTrivial(NilgeoError):
    pass


class NotRationalVector(NilgeoError):
    pass


class NotResonant(NilgeoError):
    pass


class NotInNZ(NilgeoError):
    pass


class BadDirection(NilgeoError):
    pass


class BudgetExhausted(NilgeoError):
    pass


class DegenerateEigenvalue(NilgeoError):
    pass


class ZeroMap(NilgeoError):
    pass

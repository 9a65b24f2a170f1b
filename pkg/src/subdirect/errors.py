"""Exception types shared by the library and the command line tool."""


class SubdirectError(Exception):
    """Base class for all errors raised by this package."""


class NotAGroup(SubdirectError):
    """A multiplication table fails one of the group axioms."""


class OrderLimitExceeded(SubdirectError):
    """A construction or search would exceed its configured size cap."""


class NotNormal(SubdirectError):
    """A quotient was requested by a subgroup that is not normal."""


class NotSubdirect(SubdirectError):
    """An operation requires both projections to be surjective."""


class InvalidQuintuple(SubdirectError):
    """Goursat data does not describe a subgroup of the product."""


class FactorMismatch(SubdirectError):
    """Composition of product subgroups with different middle factors."""


class NotAutomorphism(SubdirectError):
    """A twisted diagonal needs a bijective endomorphism."""


class NoDiagonal(SubdirectError):
    """An operation requires the subgroup to contain a diagonal."""


class PreconditionFailed(SubdirectError):
    """Documented preconditions of an operation do not hold."""


class ParseError(SubdirectError):
    """A group or subgroup description could not be parsed."""


class InternalInconsistency(SubdirectError):
    """Two routes that must agree by theory disagreed; this is a bug."""

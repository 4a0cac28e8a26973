"""Exception hierarchy shared by all gptlab modules."""


class GptlabError(Exception):
    """Base class for gptlab errors."""


class Infeasible(GptlabError):
    """The region is empty."""


class Unbounded(GptlabError):
    """The region (or objective) is unbounded."""


class ZeroDirection(GptlabError):
    """A support query was made with the zero vector."""


class OutsideBody(GptlabError):
    """A point lies outside the body it is being classified against."""


class UnsupportedFamily(GptlabError):
    """The arc body is not one of the catalog families this query supports."""


class NotPolytopal(GptlabError):
    """An exact polytope was required but an arc body was given."""


class NotNU(GptlabError):
    """A noisy-unrestricted system was required."""


class StateOutOfSpace(GptlabError):
    """The state is not an element of the paired state space."""


class BijectionFailure(GptlabError):
    """Face/state correspondence broke down; this indicates an engine bug."""


class InvalidParameter(GptlabError):
    """A catalog construction parameter is out of range."""


class InvalidOperator(GptlabError):
    """A matrix is not a valid density operator or effect."""


class EmptyObservableSet(GptlabError):
    """GPM enumeration needs at least one observable."""


class EmptySection(GptlabError):
    """The requested cross-section plane misses the body."""


class ParseError(GptlabError):
    """An input document does not match its JSON schema."""


class CheckFailure(GptlabError):
    """A requested check ran to completion and did not pass."""
